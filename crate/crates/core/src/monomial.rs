//! Exponent vectors and their enumeration order.

/// Iterates all exponent vectors of length `n` and total degree `d` in
/// descending lexicographic order, e.g. `(2,0), (1,1), (0,2)`.
#[derive(Clone, Debug)]
pub struct DegreeLex {
    current: Option<Vec<u32>>,
}

impl DegreeLex {
    pub fn new(n: usize, d: u32) -> Self {
        let current = match n {
            0 if d > 0 => None,
            0 => Some(Vec::new()),
            _ => {
                let mut v = vec![0; n];
                v[0] = d;
                Some(v)
            }
        };
        Self { current }
    }
}

impl Iterator for DegreeLex {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let n = out.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| out[i] > 0) {
                let mut next = out.clone();
                let tail: u32 = next[i + 1..].iter().sum();
                next[i] -= 1;
                next[i + 1] = tail + 1;
                for v in next[i + 2..].iter_mut() {
                    *v = 0;
                }
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

/// `C(n + d - 1, d)`: the number of monomials of degree `d` in `n` variables.
pub fn count_monomials(n: usize, d: u32) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    let (top, k) = (n as u128 + d as u128 - 1, d as u128);
    let k = k.min(top - k);
    (0..k).fold(1u128, |acc, i| acc * (top - i) / (i + 1))
}

pub fn total_degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descending_lex_order() {
        let v: Vec<_> = DegreeLex::new(2, 2).collect();
        assert_eq!(v, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let w: Vec<_> = DegreeLex::new(3, 1).collect();
        assert_eq!(w, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn counts_match_binomial() {
        for n in 1..5 {
            for d in 0..7 {
                assert_eq!(DegreeLex::new(n, d).count() as u128, count_monomials(n, d));
            }
        }
        assert_eq!(count_monomials(3, 2), 6);
    }
}
