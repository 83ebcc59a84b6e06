//! The partial operators `P_j`, `Q_j` on pairs `(l, J)`.

use serde::{Deserialize, Serialize};

use super::SuperPair;
use crate::monomial::DegreeLex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PqKind {
    P,
    Q,
}

/// `P_j(l, J) = (l + e_j, J \ j)` for `j` in `J`;
/// `Q_j(l, J) = (l - e_j, J u j)` for `j` not in `J` with `l_j > 0`.
pub fn apply_pq(kind: PqKind, j: usize, pair: &SuperPair) -> Option<SuperPair> {
    if j >= pair.s() {
        return None;
    }
    let mut l = pair.l.clone();
    let mut odd = pair.odd.clone();
    match kind {
        PqKind::P => {
            let pos = odd.binary_search(&j).ok()?;
            odd.remove(pos);
            l[j] += 1;
        }
        PqKind::Q => {
            let pos = odd.binary_search(&j).err()?;
            if l[j] == 0 {
                return None;
            }
            odd.insert(pos, j);
            l[j] -= 1;
        }
    }
    Some(SuperPair { l, odd })
}

/// The element of the P/Q class with the largest `J`, reached by applying
/// every `Q_j` that is defined, in ascending `j`. Afterwards no `Q_j`
/// applies, i.e. `l_j = 0` for all `j` outside `J`.
pub fn canonical_representative(pair: &SuperPair) -> SuperPair {
    let mut cur = pair.clone();
    for j in 0..cur.s() {
        if let Some(next) = apply_pq(PqKind::Q, j, &cur) {
            cur = next;
        }
    }
    cur
}

/// All pairs of total degree `d` with `s` summands, sorted.
pub fn pairs_of_degree(s: usize, d: u32) -> Vec<SuperPair> {
    let mut out = Vec::new();
    if s >= usize::BITS as usize {
        return out;
    }
    for mask in 0u64..(1u64 << s) {
        let odd: Vec<usize> = (0..s).filter(|&j| mask >> j & 1 == 1).collect();
        if odd.len() as u32 > d {
            continue;
        }
        for l in DegreeLex::new(s, d - odd.len() as u32) {
            out.push(SuperPair {
                l,
                odd: odd.clone(),
            });
        }
    }
    out.sort();
    out
}
