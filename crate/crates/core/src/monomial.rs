//! Exponent vectors ordered by graded reverse lexicographic order.

use std::cmp::Ordering;

/// A monomial: one nonnegative exponent per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient; `None` if `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic: higher total degree wins; on a tie, the
    /// monomial with the smaller exponent at the last differing variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for i in (0..self.0.len()).rev() {
                    if self.0[i] != other.0[i] {
                        return other.0[i].cmp(&self.0[i]);
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_order() {
        // x^2 > xy > y^2 > xz > yz > z^2 in grevlex with vars (x, y, z)
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} should beat {:?}", w[0], w[1]);
        }
        assert!(m(&[3, 0, 0]) > m(&[2, 0, 0]));
    }

    #[test]
    fn division_and_gcd() {
        assert_eq!(m(&[2, 1]).try_div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 1]).try_div(&m(&[0, 2])), None);
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 2])), m(&[1, 1]));
    }
}
