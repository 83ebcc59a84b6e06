//! The acceptance suite, runnable from the library and the command line.
//!
//! Every criterion is deterministic: its random instances come from a fixed
//! seed. Tolerances are the constants below.

pub mod oracle;

use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::Serialize;

use crate::attack::{find_min_invariant, recover_plaintext, InvariantSearch, Recovery};
use crate::diagmin::{
    compute_k_g, element_order_and_residues, group_closure, minimal_degree_bruteforce,
    minimal_degree_ip, reynolds_quadratic, triangular_invariant_basis, DiagonalAction,
    GeneratorRow,
};
use crate::exactalg::{determinant, inverse, mat_mul, rank, Field, Matrix, PrimeField, Rationals};
use crate::gl2family::{bruteforce_mindeg, closed_form_mindeg, valid_params_up_to, Gl2Params};
use crate::invcrypt::{
    build_keypair, decrypt, encrypt, keygen, secret_generators, Ciphertext, CryptoConfig, Variant,
};
use crate::monomial::count_monomials;
use crate::poly::Polynomial;
use crate::rng::{seeded, SeededRng};
use crate::superinv::{
    apply_phi, apply_pq, canonical_representative, even_action, minimal_superdegree, pair_weight,
    super_system, superinvariant_basis, CharacterGroup, PqKind, SuperAction, SuperPair,
    SuperPolynomial, SuperSearch,
};

pub const IP_TRIALS: usize = 200;
pub const IP_TIME_LIMIT: Duration = Duration::from_secs(60);
pub const GL2_EMAX: u64 = 40;
pub const BOUNDS_TRIALS: usize = 50;
pub const BOUNDS_MAX_ORDER: usize = 64;
pub const CRYPTO_TRIALS: usize = 500;
pub const CRYPTO_TIME_LIMIT: Duration = Duration::from_secs(30);
pub const ATTACK_TRIALS: usize = 50;
pub const ATTACK_MAX_M: u64 = 4;
pub const SUPER_EXAMPLE_DMAX: u32 = 6;
pub const PQ_TRIALS: usize = 1000;
pub const G0_TRIALS: usize = 30;
pub const G0_DMAX: u32 = 8;
pub const SANDWICH_TRIALS: usize = 20;
pub const REYNOLDS_TRIALS: usize = 20;
pub const REYNOLDS_MAX_ORDER: usize = 48;
pub const SEMISIMPLE_TRIALS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

const CRITERIA: [(u8, &str, Check); 11] = [
    (1, "ip reduction matches brute force", ip_vs_bruteforce),
    (2, "gl2 closed form", gl2_formula),
    (3, "k_g and exponent bounds", bounds),
    (4, "crypto round trip", crypto_round_trip),
    (5, "attack degree equals M", attack_equals_m),
    (6, "superinvariant example", super_example),
    (7, "P/Q operator algebra", pq_algebra),
    (8, "g = 0 equality", g_zero_equality),
    (9, "sandwich bound", sandwich),
    (10, "reynolds quadratic form", reynolds),
    (11, "semisimple reduction", semisimple),
];

pub fn criterion_ids() -> impl Iterator<Item = u8> {
    CRITERIA.iter().map(|c| c.0)
}

pub fn run(id: u8) -> Option<CriterionReport> {
    let (id, name, check) = *CRITERIA.iter().find(|c| c.0 == id)?;
    let (passed, detail) = match check() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionReport {
        id,
        name,
        passed,
        detail,
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    criterion_ids().filter_map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_finite_action(
    rng: &mut SeededRng,
    max_n: usize,
    max_rows: usize,
    max_modulus: u64,
) -> DiagonalAction {
    let n = rng.random_range(1..=max_n);
    let rows = (0..rng.random_range(1..=max_rows))
        .map(|_| {
            let k = rng.random_range(2..=max_modulus);
            GeneratorRow {
                modulus: k,
                weights: (0..n).map(|_| rng.random_range(0..k as i64)).collect(),
            }
        })
        .collect();
    DiagonalAction::new(n, rows).expect("weights have length n")
}

fn ip_vs_bruteforce() -> Result<String, String> {
    let mut rng = seeded(0x1001);
    let start = Instant::now();
    for t in 0..IP_TRIALS {
        let act = random_finite_action(&mut rng, 4, 2, 12);
        let tb = triangular_invariant_basis(&act).map_err(|e| format!("trial {t}: {e}"))?;
        let ip = minimal_degree_ip(&tb);
        let brute = minimal_degree_bruteforce(&act, act.moduli_lcm()).degree();
        ensure(brute == Some(ip), || {
            format!("trial {t}: {act:?}: ip {ip}, brute force {brute:?}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < IP_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{IP_TRIALS} actions agree in {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn gl2_formula() -> Result<String, String> {
    let worked = [
        (
            Gl2Params {
                e: 6,
                g: 6,
                v1: 3,
                v2: 2,
                j: 1,
                d: 1,
            },
            2,
        ),
        (
            Gl2Params {
                e: 6,
                g: 6,
                v1: 2,
                v2: 3,
                j: 1,
                d: 1,
            },
            2,
        ),
        (
            Gl2Params {
                e: 30,
                g: 10,
                v1: 5,
                v2: 2,
                j: 7,
                d: 3,
            },
            6,
        ),
    ];
    for (p, want) in worked {
        let c = closed_form_mindeg(&p).map_err(|e| format!("{p:?}: {e}"))?;
        let b = bruteforce_mindeg(&p).map_err(|e| format!("{p:?}: {e}"))?;
        ensure(c == want && b == want, || {
            format!("{p:?}: closed {c}, brute {b}, expected {want}")
        })?;
    }
    let sweep = valid_params_up_to(GL2_EMAX);
    for p in &sweep {
        let c = closed_form_mindeg(p).map_err(|e| e.to_string())?;
        let b = bruteforce_mindeg(p).map_err(|e| e.to_string())?;
        ensure(c == b, || format!("{p:?}: closed {c}, brute {b}"))?;
    }
    Ok(format!(
        "{} valid tuples with e <= {GL2_EMAX} plus 3 worked tuples",
        sweep.len()
    ))
}

fn bounds() -> Result<String, String> {
    let mut rng = seeded(0x1003);
    let mut done = 0;
    let mut skipped = 0;
    while done < BOUNDS_TRIALS {
        let act = random_finite_action(&mut rng, 4, 2, 12);
        let Ok((k, elems)) = act.group_elements(BOUNDS_MAX_ORDER) else {
            skipped += 1;
            continue;
        };
        let m = minimal_degree_bruteforce(&act, k)
            .degree()
            .ok_or("no invariant below the exponent")?;
        let mut max_kg = 0;
        let mut exponent = 1u64;
        for x in elems.iter().filter(|x| x.iter().any(|&v| v != 0)) {
            let (order, residues) = element_order_and_residues(k, x);
            let kg = compute_k_g(order, &residues).map_err(|e| e.to_string())?;
            max_kg = max_kg.max(kg);
            exponent = num_integer::lcm(exponent, order);
        }
        ensure(max_kg <= m && m <= exponent, || {
            format!("{act:?}: max k_g {max_kg}, M {m}, q {exponent}")
        })?;
        done += 1;
    }
    let sharp = DiagonalAction::cyclic(4, vec![1, 1, 1]).expect("three weights");
    let m = minimal_degree_bruteforce(&sharp, 8).degree();
    ensure(m == Some(4), || format!("w=(1,1,1) mod 4 gave {m:?}"))?;
    Ok(format!("{done} groups of order <= {BOUNDS_MAX_ORDER} ({skipped} larger ones redrawn); sharp instance M = 4"))
}

fn worked_key() -> (crate::invcrypt::PublicKey, crate::invcrypt::PrivateKey) {
    let field = PrimeField::new(7).expect("7 is prime");
    let action = DiagonalAction::cyclic(6, vec![1, 2]).expect("two weights");
    let a = Matrix::new(2, 2, vec![1u64, 1, 0, 1]).expect("2x2");
    let g = secret_generators(&field, &action);
    let a_inv = inverse(&field, &a).expect("unipotent");
    let h1 = mat_mul(&field, &mat_mul(&field, &a_inv, &g[0]), &a);
    build_keypair(
        7,
        action,
        a,
        vec![0, 3],
        vec![vec![1, 1], vec![1, 3]],
        vec![h1],
        Variant::Two,
    )
    .expect("worked key is valid")
}

fn random_crypto_config(rng: &mut SeededRng, primes: &[u64], n: usize, s: usize) -> CryptoConfig {
    let p = *primes.choose(rng).expect("nonempty");
    let divisors: Vec<u64> = (2..p).filter(|k| (p - 1) % k == 0).collect();
    let rows = (0..rng.random_range(1..=2))
        .map(|_| {
            let k = *divisors.choose(rng).expect("p - 1 >= 2");
            GeneratorRow {
                modulus: k,
                weights: (0..n).map(|_| rng.random_range(0..k as i64)).collect(),
            }
        })
        .collect();
    CryptoConfig {
        p,
        action: DiagonalAction::new(n, rows).expect("weights have length n"),
        messages: s,
        generators: rng.random_range(1..=3),
        word_length: rng.random_range(1..=4),
        variant: if rng.random_bool(0.5) {
            Variant::One
        } else {
            Variant::Two
        },
        min_degree: 1,
        degree_cap: 32,
    }
}

fn crypto_round_trip() -> Result<String, String> {
    let (_, sk) = worked_key();
    let got = decrypt(&sk, &Ciphertext { u: vec![4, 2] });
    ensure(got == Ok(0), || {
        format!("worked ciphertext (4,2) decrypted to {got:?}")
    })?;

    let mut rng = seeded(0x1004);
    let start = Instant::now();
    let mut redraws = 0;
    for t in 0..CRYPTO_TRIALS {
        let n = [2, 3][t % 2];
        let s = [2, 4][(t / 2) % 2];
        let (pk, sk) = loop {
            let cfg = random_crypto_config(&mut rng, &[7, 13, 31, 97], n, s);
            match keygen(&cfg, rng.random()) {
                Ok(keys) => break keys,
                Err(_) => redraws += 1,
            }
        };
        let idx = rng.random_range(0..s);
        let ct =
            encrypt(&pk, idx, rng.random(), rng.random_range(0..=6)).map_err(|e| e.to_string())?;
        let got = decrypt(&sk, &ct);
        ensure(got == Ok(idx), || {
            format!("trial {t}: index {idx} decrypted to {got:?}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < CRYPTO_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "worked instance ok; {CRYPTO_TRIALS}/{CRYPTO_TRIALS} round trips in {:.2}s ({redraws} configs redrawn)",
        elapsed.as_secs_f64()
    ))
}

fn check_sizes(search: &InvariantSearch<PrimeField>, m: usize, n: usize) -> Result<(), String> {
    for sz in search.sizes() {
        let cols = count_monomials(n, sz.degree) as usize;
        ensure(sz.cols == cols && sz.rows == m * cols, || {
            format!("system size {sz:?} for m={m}, n={n}")
        })?;
    }
    Ok(())
}

fn attack_equals_m() -> Result<String, String> {
    let (pk, _) = worked_key();
    let field = pk.field();
    let search = find_min_invariant(&field, &pk.generators, 3);
    let InvariantSearch::Found {
        degree: 3, basis, ..
    } = &search
    else {
        return Err(format!("worked attack gave {:?}", search.degree()));
    };
    check_sizes(&search, 1, 2)?;
    let x2_cubed = Polynomial::monomial(&field, vec![0, 3], 1);
    let span_rank = |polys: &[&Polynomial<PrimeField>]| {
        let monos: Vec<Vec<u32>> = crate::monomial::DegreeLex::new(2, 3).collect();
        let rows: Vec<Vec<u64>> = polys
            .iter()
            .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
            .collect();
        rank(&field, &Matrix::from_rows(&rows).expect("rectangular"))
    };
    let mut with = basis.iter().collect::<Vec<_>>();
    let r = span_rank(&with);
    with.push(&x2_cubed);
    ensure(span_rank(&with) == r, || "x2^3 is not in the span".into())?;
    for idx in 0..pk.messages.len() {
        for seed in 0..5 {
            let ct = encrypt(&pk, idx, seed, 4).map_err(|e| e.to_string())?;
            let rec = recover_plaintext(&pk.messages, basis, &ct.u);
            ensure(rec == Recovery::Index(idx), || {
                format!("index {idx}, seed {seed}: {rec:?}")
            })?;
        }
    }

    let mut rng = seeded(0x1005);
    let mut done = 0;
    let mut redraws = 0;
    while done < ATTACK_TRIALS {
        let n = rng.random_range(2..=3);
        let cfg = random_crypto_config(&mut rng, &[7, 13, 31, 37], n, 2);
        let m_secret = minimal_degree_bruteforce(&cfg.action, ATTACK_MAX_M).degree();
        let Some(m_secret) = m_secret else {
            redraws += 1;
            continue;
        };
        let Ok((pk, _)) = keygen(&cfg, rng.random()) else {
            redraws += 1;
            continue;
        };
        let search = find_min_invariant(&pk.field(), &pk.generators, ATTACK_MAX_M as u32);
        ensure(search.degree() == Some(m_secret as u32), || {
            format!(
                "{:?}: attack {:?}, M {m_secret}",
                cfg.action,
                search.degree()
            )
        })?;
        ensure(search.sizes().len() == m_secret as usize, || {
            "kernel nonempty below M".into()
        })?;
        check_sizes(&search, pk.generators.len(), n)?;
        done += 1;
    }
    Ok(format!("worked attack: degree 3, x2^3 in span; {done} random keys with M <= {ATTACK_MAX_M} ({redraws} redrawn)"))
}

fn z_example(xi: i64) -> SuperAction<Rationals> {
    let q = Rationals;
    SuperAction::new(
        q,
        CharacterGroup::new(1, vec![]).expect("no torsion"),
        vec![0],
        vec![q.from_i64(xi)],
        vec![vec![1], vec![-1]],
    )
    .expect("valid example")
}

fn in_span<F: Field>(basis: &[SuperPolynomial<F>], target: &SuperPolynomial<F>) -> bool {
    let field = target.field();
    let mut pairs: Vec<SuperPair> = basis
        .iter()
        .chain([target])
        .flat_map(|p| p.terms().map(|t| t.0.clone()))
        .collect();
    pairs.sort();
    pairs.dedup();
    let to_rows = |ps: &[&SuperPolynomial<F>]| {
        let rows: Vec<Vec<F::Elem>> = ps
            .iter()
            .map(|p| pairs.iter().map(|k| p.coeff(k)).collect())
            .collect();
        if rows.is_empty() {
            0
        } else {
            rank(field, &Matrix::from_rows(&rows).expect("rectangular"))
        }
    };
    let mut all: Vec<&SuperPolynomial<F>> = basis.iter().collect();
    let r = to_rows(&all);
    all.push(target);
    to_rows(&all) == r
}

fn super_example() -> Result<String, String> {
    let q = Rationals;
    let pair = |l: [u32; 2], odd: &[usize]| SuperPair::new(l.to_vec(), odd.to_vec());
    let mut counts = Vec::new();
    for xi in [0, 1] {
        let act = z_example(xi);
        for d in 1..=SUPER_EXAMPLE_DMAX {
            let want = oracle::invariant_dimension(&act, d);
            let expected = if d % 2 == 0 { 2 } else { 0 };
            ensure(want == expected, || {
                format!("xi={xi}, d={d}: oracle dimension {want}")
            })?;
            let basis = superinvariant_basis(&act, d);
            ensure(basis.len() == want, || {
                format!("xi={xi}, d={d}: solver {} vs oracle {want}", basis.len())
            })?;
            for b in &basis {
                ensure(oracle::is_invariant(&act, b), || {
                    format!("xi={xi}, d={d}: {b:?} fails the coaction check")
                })?;
            }
            counts.push(basis.len());
        }
        let basis = superinvariant_basis(&act, 2);
        // f_0^{e1+e2} - xi f_1^{1,2} and f_0^{e1} f_1^{2} - f_0^{e2} f_1^{1}
        let mut first = SuperPolynomial::term(&q, pair([1, 1], &[]), q.one());
        first.add_term(pair([0, 0], &[0, 1]), q.from_i64(-xi));
        let mut second = SuperPolynomial::term(&q, pair([1, 0], &[1]), q.one());
        second.add_term(pair([0, 1], &[0]), q.from_i64(-1));
        ensure(in_span(&basis, &first) && in_span(&basis, &second), || {
            format!("xi={xi}: named generators not in the span")
        })?;
        if xi != 0 {
            ensure(basis.iter().any(|b| b.len() >= 2), || {
                "degree-2 basis is monomial".into()
            })?;
        }
    }
    Ok(format!(
        "dimensions for d = 1..{SUPER_EXAMPLE_DMAX}, xi = 0 then 1: {counts:?}"
    ))
}

fn random_pair(rng: &mut SeededRng, s: usize, max_degree: u32) -> SuperPair {
    let mut budget = rng.random_range(0..=max_degree);
    let mut l = vec![0u32; s];
    while budget > 0 {
        l[rng.random_range(0..s)] += 1;
        budget -= 1;
    }
    let odd = (0..s).filter(|_| rng.random_bool(0.5)).collect();
    SuperPair::new(l, odd)
}

fn pq_algebra() -> Result<String, String> {
    use PqKind::{P, Q};
    let mut rng = seeded(0x1007);
    let mut checked = [0usize; 4];
    let mut special_form = 0;
    for t in 0..PQ_TRIALS {
        let s = rng.random_range(1..=5);
        let pr = random_pair(&mut rng, s, 6);
        // Weights in Z x Z/2 with a random g; only the weight shift is used.
        let field = Rationals;
        let weights = (0..s)
            .map(|_| vec![rng.random_range(-3..=3), rng.random_range(0..2)])
            .collect();
        let g = vec![rng.random_range(-2..=2), rng.random_range(0..2)];
        let act = SuperAction::new(
            field,
            CharacterGroup::new(1, vec![2]).expect("valid"),
            g.clone(),
            vec![field.zero()],
            weights,
        )
        .expect("valid");
        let grp = act.group();
        let w = pair_weight(&act, &pr);
        for j in 0..s {
            if let Some(x) = apply_pq(P, j, &pr) {
                ensure(apply_pq(Q, j, &x).as_ref() == Some(&pr), || {
                    format!("trial {t}: Q{j} P{j} {pr:?}")
                })?;
                ensure(x.degree() == pr.degree(), || {
                    format!("trial {t}: P{j} changed the degree")
                })?;
                ensure(
                    pair_weight(&act, &x) == grp.add(&w, &grp.scale(&g, -1)),
                    || format!("trial {t}: P{j} weight"),
                )?;
                checked[0] += 1;
            }
            if let Some(x) = apply_pq(Q, j, &pr) {
                ensure(apply_pq(P, j, &x).as_ref() == Some(&pr), || {
                    format!("trial {t}: P{j} Q{j} {pr:?}")
                })?;
                ensure(pair_weight(&act, &x) == grp.add(&w, &g), || {
                    format!("trial {t}: Q{j} weight")
                })?;
                checked[1] += 1;
            }
            for k in (0..s).filter(|&k| k != j) {
                let pq = apply_pq(Q, k, &pr).and_then(|x| apply_pq(P, j, &x));
                let qp = apply_pq(P, j, &pr).and_then(|x| apply_pq(Q, k, &x));
                if pq.is_some() {
                    ensure(qp == pq, || {
                        format!("trial {t}: P{j} Q{k} != Q{k} P{j} on {pr:?}")
                    })?;
                    checked[2] += 1;
                }
                if qp.is_some() {
                    ensure(qp == pq, || {
                        format!("trial {t}: Q{k} P{j} != P{j} Q{k} on {pr:?}")
                    })?;
                    checked[3] += 1;
                }
            }
        }
        let rep = canonical_representative(&pr);
        let mut cur = pr.clone();
        for _ in 0..12 {
            let kind = if rng.random_bool(0.5) { P } else { Q };
            if let Some(next) = apply_pq(kind, rng.random_range(0..s), &cur) {
                cur = next;
            }
        }
        ensure(canonical_representative(&cur) == rep, || {
            format!("trial {t}: class of {pr:?} has two representatives")
        })?;
        ensure((0..s).all(|j| apply_pq(Q, j, &rep).is_none()), || {
            format!("trial {t}: {rep:?} is not Q-maximal")
        })?;
        if rep.odd.len() == s || rep.l.iter().all(|&v| v == 0) {
            special_form += 1;
        }
    }
    Ok(format!(
        "{PQ_TRIALS} pairs; identities checked {checked:?} times; {special_form} representatives of form (l, all) or (0, J)"
    ))
}

fn random_rational(rng: &mut SeededRng) -> BigRational {
    BigRational::new(
        rng.random_range(-3i64..=3).into(),
        rng.random_range(1i64..=3).into(),
    )
}

fn g_zero_equality() -> Result<String, String> {
    let q = Rationals;
    let mut rng = seeded(0x1008);
    let mut degrees = Vec::new();
    let mut phi_checks = 0;
    for t in 0..G0_TRIALS {
        let s = rng.random_range(1..=3);
        let torsion: Vec<u64> = if rng.random_bool(0.3) {
            vec![rng.random_range(2..=3)]
        } else {
            vec![]
        };
        let grp = CharacterGroup::new(1, torsion.clone()).expect("valid");
        let weights: Vec<Vec<i64>> = (0..s)
            .map(|_| {
                let mut h = vec![rng.random_range(-3..=3)];
                h.extend(torsion.iter().map(|&m| rng.random_range(0..m as i64)));
                h
            })
            .collect();
        let act = SuperAction::new(
            q,
            grp.clone(),
            grp.zero(),
            vec![random_rational(&mut rng)],
            weights,
        )
        .map_err(|e| e.to_string())?;
        let even = even_action(&act, false).map_err(|e| e.to_string())?;
        let m_even = minimal_degree_bruteforce(&even, u64::from(G0_DMAX)).degree();
        let m_super = minimal_superdegree(&act, G0_DMAX);
        ensure(m_even == m_super.degree().map(u64::from), || {
            format!("trial {t}: even {m_even:?}, super {:?}", m_super.degree())
        })?;
        if let SuperSearch::Found { degree, basis } = &m_super {
            for b in basis {
                ensure(oracle::is_invariant(&act, b), || {
                    format!("trial {t}: basis element fails the coaction check")
                })?;
            }
            let monomials: Vec<SuperPair> = crate::superinv::pairs_of_degree(s, *degree)
                .into_iter()
                .filter(|p| p.odd.is_empty() && grp.is_zero(&pair_weight(&act, p)))
                .collect();
            let u = monomials
                .choose(&mut rng)
                .ok_or_else(|| format!("trial {t}: no even invariant monomial"))?;
            let image = apply_phi(&act, &SuperPolynomial::term(&q, u.clone(), q.one()));
            let sys = super_system(&act, *degree);
            ensure(image.terms().all(|(p, _)| sys.unknowns.contains(p)), || {
                format!("trial {t}: phi left weight zero")
            })?;
            let v: Vec<BigRational> = sys.unknowns.iter().map(|p| image.coeff(p)).collect();
            let prod = crate::exactalg::mat_vec(&q, &sys.matrix, &v);
            ensure(prod.iter().all(|c| q.is_zero(c)), || {
                format!("trial {t}: phi({u:?}) violates the system")
            })?;
            phi_checks += 1;
        }
        degrees.push(m_super.degree());
    }
    let found = degrees.iter().filter(|d| d.is_some()).count();
    Ok(format!("{G0_TRIALS} actions agree ({found} with an invariant up to degree {G0_DMAX}); {phi_checks} phi images checked"))
}

fn sandwich() -> Result<String, String> {
    let q = Rationals;
    let mut rng = seeded(0x1009);
    let grp = CharacterGroup::new(1, vec![2]).expect("valid");
    let mut done = 0;
    let mut redraws = 0;
    let mut seen = Vec::new();
    while done < SANDWICH_TRIALS {
        let s = rng.random_range(1..=3);
        let weights = (0..s)
            .map(|_| vec![rng.random_range(-3..=3), rng.random_range(0..2)])
            .collect();
        let act = SuperAction::new(
            q,
            grp.clone(),
            vec![0, 1],
            vec![random_rational(&mut rng)],
            weights,
        )
        .map_err(|e| e.to_string())?;
        let quotient = even_action(&act, true).map_err(|e| e.to_string())?;
        let Some(m1) = minimal_degree_bruteforce(&quotient, 6).degree() else {
            redraws += 1;
            continue;
        };
        let dmax = 2 * m1 as u32 + 1;
        let m = minimal_superdegree(&act, dmax).degree();
        ensure(
            m.is_some_and(|m| u64::from(m) >= m1 && u64::from(m) <= 2 * m1),
            || format!("{act:?}: M' = {m1}, super {m:?}"),
        )?;
        seen.push((m1, m.expect("checked")));
        done += 1;
    }
    Ok(format!(
        "{done} actions within bounds ({redraws} with M' > 6 redrawn); (M', M) = {seen:?}"
    ))
}

fn random_invertible(rng: &mut SeededRng, n: usize) -> Matrix<BigRational> {
    let q = Rationals;
    loop {
        let m = Matrix::from_fn(n, n, |_, _| random_rational(rng));
        if !q.is_zero(&determinant(&q, &m)) {
            return m;
        }
    }
}

fn integer_matrix(rows: &[&[i64]]) -> Matrix<BigRational> {
    let q = Rationals;
    let rows: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| q.from_i64(v)).collect())
        .collect();
    Matrix::from_rows(&rows).expect("rectangular")
}

fn random_signed_permutation(rng: &mut SeededRng, n: usize) -> Matrix<BigRational> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<i64> = (0..n)
        .map(|_| if rng.random_bool(0.5) { -1 } else { 1 })
        .collect();
    let q = Rationals;
    Matrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            q.from_i64(signs[i])
        } else {
            q.zero()
        }
    })
}

fn reynolds() -> Result<String, String> {
    let q = Rationals;
    let mut rng = seeded(0x100a);
    let mut orders = Vec::new();
    while orders.len() < REYNOLDS_TRIALS {
        let gens: Vec<Matrix<BigRational>> = match rng.random_range(0..3) {
            0 => {
                let n = rng.random_range(2..=3);
                (0..rng.random_range(1..=2))
                    .map(|_| random_signed_permutation(&mut rng, n))
                    .collect()
            }
            1 => vec![
                integer_matrix(&[&[0, -1], &[1, -1]]),
                integer_matrix(&[&[0, 1], &[1, 0]]),
            ],
            _ => vec![integer_matrix(&[&[1, -1], &[1, 0]])],
        };
        let n = gens[0].rows();
        let p = random_invertible(&mut rng, n);
        let p_inv = inverse(&q, &p).expect("invertible");
        let gens: Vec<_> = gens
            .iter()
            .map(|g| mat_mul(&q, &mat_mul(&q, &p_inv, g), &p))
            .collect();
        let Ok(elems) = group_closure(&q, &gens, REYNOLDS_MAX_ORDER) else {
            continue;
        };
        let form = reynolds_quadratic(&gens, REYNOLDS_MAX_ORDER).map_err(|e| e.to_string())?;
        for g in &elems {
            let moved = mat_mul(&q, &mat_mul(&q, &g.transpose(), &form), g);
            ensure(moved == form, || "g^T Q g != Q".into())?;
        }
        ensure(form.transpose() == form, || "Q is not symmetric".into())?;
        for k in 1..=n {
            let minor = Matrix::from_fn(k, k, |i, j| form.get(i, j).clone());
            let det = determinant(&q, &minor);
            ensure(det > q.zero(), || format!("leading minor {k} is {det}"))?;
        }
        orders.push(elems.len());
    }
    Ok(format!("{REYNOLDS_TRIALS} groups, orders {orders:?}"))
}

fn semisimple() -> Result<String, String> {
    let mut rng = seeded(0x100b);
    let primes = [31u64, 37, 41, 43, 61, 73, 97];
    let mut done = 0;
    let mut degrees = Vec::new();
    while done < SEMISIMPLE_TRIALS {
        let p = *primes.choose(&mut rng).expect("nonempty");
        let field = PrimeField::new(p).map_err(|e| e.to_string())?;
        let divisors: Vec<u64> = (2..p).filter(|k| (p - 1) % k == 0).collect();
        let k = *divisors.choose(&mut rng).expect("p - 1 >= 2");
        // Blocks of repeated eigenvalues.
        let block_sizes: Vec<usize> = (0..rng.random_range(1..=2))
            .map(|_| rng.random_range(1..=2))
            .collect();
        let block_weights: Vec<i64> = block_sizes
            .iter()
            .map(|_| rng.random_range(0..k as i64))
            .collect();
        let weights: Vec<i64> = block_sizes
            .iter()
            .zip(&block_weights)
            .flat_map(|(&b, &w)| std::iter::repeat_n(w, b))
            .collect();
        let n = weights.len();
        let semisimple = DiagonalAction::cyclic(k, weights.clone()).expect("weights have length n");
        let Some(m_t) = minimal_degree_bruteforce(&semisimple, ATTACK_MAX_M).degree() else {
            continue;
        };
        let t = secret_generators(&field, &semisimple).remove(0);
        let mut starts = Vec::new();
        let mut at = 0;
        for &b in &block_sizes {
            starts.push((at, b));
            at += b;
        }
        let u = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                1
            } else if starts.iter().any(|&(s0, b)| i >= s0 && j < s0 + b && i < j) {
                rng.random_range(0..p)
            } else {
                0
            }
        });
        ensure(mat_mul(&field, &t, &u) == mat_mul(&field, &u, &t), || {
            "t and u do not commute".into()
        })?;
        let a = loop {
            let cand = Matrix::from_fn(n, n, |_, _| rng.random_range(0..p));
            if inverse(&field, &cand).is_some() {
                break cand;
            }
        };
        let a_inv = inverse(&field, &a).expect("invertible");
        let h = mat_mul(
            &field,
            &a_inv,
            &mat_mul(&field, &mat_mul(&field, &t, &u), &a),
        );
        let found = find_min_invariant(&field, &[h], ATTACK_MAX_M as u32 + 2).degree();
        ensure(found.map(u64::from) == Some(m_t), || {
            format!("p={p}, k={k}, weights {weights:?}: H gives {found:?}, <t> gives {m_t}")
        })?;
        degrees.push(m_t);
        done += 1;
    }
    Ok(format!("{SEMISIMPLE_TRIALS} instances, M = {degrees:?}"))
}
