//! Galois fields GF(2), GF(3) and GF(4) as explicit operation tables.
//!
//! Elements are represented by indices `0..d`. For prime `d` the index is the
//! residue itself. For GF(4) the index encodes the polynomial basis over
//! GF(2) with modulus x² + x + 1: index 2 is ω (= x) and index 3 is ω² = ω + 1,
//! matching the labels {0, 1, ω, ω²}.

use crate::error::Error;
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GaloisField {
    /// Characteristic.
    pub p: usize,
    /// Extension degree.
    pub n: usize,
    /// Element count d = p^n.
    pub d: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl GaloisField {
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.d
    }

    /// Exhaustive field-axiom check. Returns human-readable violations; empty
    /// means the tables form a field with identities 0 and 1.
    pub fn axiom_violations(&self) -> Vec<String> {
        let d = self.d;
        let mut out = Vec::new();
        let in_range = |t: &Vec<Vec<usize>>| t.iter().all(|r| r.iter().all(|&x| x < d));
        if !in_range(&self.add) || !in_range(&self.mul) {
            out.push("table entry out of range".into());
            return out;
        }
        for a in 0..d {
            if self.add(a, 0) != a {
                out.push(format!("additive identity fails at {a}"));
            }
            if self.mul(a, 1) != a {
                out.push(format!("multiplicative identity fails at {a}"));
            }
            if !(0..d).any(|b| self.add(a, b) == 0) {
                out.push(format!("no additive inverse for {a}"));
            }
            if a != 0 && !(0..d).any(|b| self.mul(a, b) == 1) {
                out.push(format!("no multiplicative inverse for {a}"));
            }
        }
        for a in 0..d {
            for b in 0..d {
                if self.add(a, b) != self.add(b, a) {
                    out.push(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    out.push(format!("multiplication not commutative at ({a},{b})"));
                }
                for c in 0..d {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        out.push(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        out.push(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        out.push(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        out
    }
}

/// Build GF(p^n) for p^n ∈ {2, 3, 4}. GF(4) uses the irreducible polynomial
/// x² + x + 1.
pub fn build_field(p: usize, n: usize) -> Result<GaloisField> {
    let d = p.checked_pow(n as u32).unwrap_or(0);
    match (p, n) {
        (2, 1) | (3, 1) => {
            let add = (0..d).map(|a| (0..d).map(|b| (a + b) % d).collect()).collect();
            let mul = (0..d).map(|a| (0..d).map(|b| (a * b) % d).collect()).collect();
            Ok(GaloisField {
                p,
                n,
                d,
                add,
                mul,
                labels: (0..d).map(|x| x.to_string()).collect(),
            })
        }
        (2, 2) => {
            // Bit i of the index is the coefficient of x^i; addition is XOR
            // and multiplication reduces by x² = x + 1.
            let add = (0..4usize).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            let mul = (0..4usize)
                .map(|a| (0..4).map(|b| gf4_mul(a, b)).collect())
                .collect();
            Ok(GaloisField {
                p,
                n,
                d,
                add,
                mul,
                labels: vec!["0".into(), "1".into(), "ω".into(), "ω²".into()],
            })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

fn gf4_mul(a: usize, b: usize) -> usize {
    let mut acc = 0usize;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0b100 != 0 {
            a ^= 0b111; // x^2 = x + 1
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_characteristic_two() {
        let f = build_field(2, 1).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert!(f.axiom_violations().is_empty());
    }

    #[test]
    fn gf3_modular_product() {
        let f = build_field(3, 1).unwrap();
        assert_eq!(f.mul(2, 2), 1);
        assert!(f.axiom_violations().is_empty());
    }

    #[test]
    fn gf4_omega_squared() {
        let f = build_field(2, 2).unwrap();
        // ω · ω = ω + 1 = ω²
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 1), 3);
        assert_eq!(f.labels[2], "ω");
        assert!(f.axiom_violations().is_empty());
    }

    #[test]
    fn unsupported_dimension_rejected() {
        assert!(matches!(build_field(5, 1), Err(Error::UnsupportedDimension(5))));
        assert!(matches!(build_field(2, 3), Err(Error::UnsupportedDimension(8))));
    }
}
