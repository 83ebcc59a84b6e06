use invdeg::attack::{find_min_invariant, recover_plaintext, AttackReport, Recovery};
use invdeg::diagmin::{DiagonalAction, GeneratorRow};
use invdeg::invcrypt::{decrypt, encrypt, keygen, CryptoConfig, PrivateKey, PublicKey, Variant};

fn config(variant: Variant) -> CryptoConfig {
    CryptoConfig {
        p: 31,
        action: DiagonalAction::new(
            3,
            vec![GeneratorRow {
                modulus: 5,
                weights: vec![1, 2, 3],
            }],
        )
        .unwrap(),
        messages: 4,
        generators: 2,
        word_length: 3,
        variant,
        min_degree: 1,
        degree_cap: 32,
    }
}

#[test]
fn keys_survive_json_and_decrypt() {
    let (pk, sk) = keygen(&config(Variant::One), 11).unwrap();
    let pk2 = PublicKey::from_json(pk.to_json()).unwrap();
    let sk2 = PrivateKey::from_json(sk.to_json()).unwrap();
    assert_eq!(pk, pk2);
    assert_eq!(sk, sk2);
    assert!(pk.group.is_some() && pk.invariant.is_some());
    for idx in 0..4 {
        let ct = encrypt(&pk2, idx, 100 + idx as u64, 5).unwrap();
        assert_eq!(decrypt(&sk2, &ct).unwrap(), idx);
    }
}

#[test]
fn keygen_is_deterministic() {
    let a = keygen(&config(Variant::Two), 3).unwrap();
    let b = keygen(&config(Variant::Two), 3).unwrap();
    assert_eq!(a, b);
    assert!(a.0.group.is_none());
}

#[test]
fn attack_breaks_generated_key() {
    let (pk, _) = keygen(&config(Variant::Two), 5).unwrap();
    let field = pk.field();
    // w = (1,2,3) mod 5: x2 x3 is invariant and no linear form is.
    let search = find_min_invariant(&field, &pk.generators, 5);
    assert_eq!(search.degree(), Some(2));
    let ct = encrypt(&pk, 2, 9, 6).unwrap();
    let invdeg::attack::InvariantSearch::Found { basis, .. } = &search else {
        unreachable!()
    };
    assert_eq!(
        recover_plaintext(&pk.messages, basis, &ct.u),
        Recovery::Index(2)
    );
    let report = AttackReport::new(&search, Some(2));
    let doc = serde_json::to_value(&report).unwrap();
    assert_eq!(doc["found_degree"], 2);
    assert_eq!(doc["system_sizes"][0], serde_json::json!([1, 6, 3]));
}
