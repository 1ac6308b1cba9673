//! Exact Clifford algebra of `ℝⁿ` with `eᵢ² = +1`, restricted to elements
//! whose coefficients lie in `2^{-k/2}·ℤ`. This covers the positive pin
//! group generated by the unit vectors `(eᵢ - eᵢ₊₁)/√2`.

use std::fmt;

/// `coeffs[A] / (√2)^scale` summed over blades `A` (bitmasks).
///
/// Kept normalized: `scale` is as small as possible, so equal values have
/// equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multivector {
    n: usize,
    scale: u32,
    coeffs: Vec<i64>,
}

/// Sign of `e_A e_B` relative to `e_{A xor B}` for the Euclidean signature.
#[inline]
pub fn blade_sign(a: usize, b: usize) -> i64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Multivector {
    pub fn scalar(n: usize, c: i64) -> Self {
        let mut coeffs = vec![0; 1 << n];
        coeffs[0] = c;
        Multivector { n, scale: 0, coeffs }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    /// `(e_i - e_{i+1})/√2` for `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut coeffs = vec![0; 1 << n];
        coeffs[1 << (i - 1)] = 1;
        coeffs[1 << i] = -1;
        Multivector { n, scale: 1, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn neg(&self) -> Self {
        Multivector { n: self.n, scale: self.scale, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Multivector) -> Multivector {
        assert_eq!(self.n, other.n, "Clifford dimension mismatch");
        let rhs: Vec<(usize, i64)> =
            other.coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(b, c)| (b, *c)).collect();
        let mut out = vec![0i64; self.coeffs.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for &(b, cb) in &rhs {
                let term = ca.checked_mul(cb).and_then(|t| t.checked_mul(blade_sign(a, b)));
                let slot = &mut out[a ^ b];
                *slot = term.and_then(|t| slot.checked_add(t)).expect("Clifford coefficient overflow");
            }
        }
        let mut m = Multivector { n: self.n, scale: self.scale + other.scale, coeffs: out };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        while self.scale >= 2 && self.coeffs.iter().all(|c| c % 2 == 0) {
            for c in self.coeffs.iter_mut() {
                *c /= 2;
            }
            self.scale -= 2;
        }
    }

    /// `Some(false)` if equal, `Some(true)` if `self = -other`, else `None`.
    pub fn sign_relative_to(&self, other: &Multivector) -> Option<bool> {
        if self == other {
            Some(false)
        } else if *self == other.neg() {
            Some(true)
        } else {
            None
        }
    }

    /// Coefficient of blade `mask` as the dyadic pair `(c, k)` meaning `c/√2^k`.
    pub fn coefficient(&self, mask: usize) -> (i64, u32) {
        (self.coeffs[mask], self.scale)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for i in 0..self.n {
                if mask & (1 << i) != 0 {
                    write!(f, "e{}", i + 1)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        if self.scale > 0 {
            write!(f, " / sqrt2^{}", self.scale)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for i in 1..4 {
            let v = Multivector::generator(4, i);
            assert_eq!(v.mul(&v), Multivector::one(4));
        }
    }

    #[test]
    fn braid_relation_has_order_three() {
        let v = Multivector::generator(3, 1);
        let w = Multivector::generator(3, 2);
        let vw = v.mul(&w);
        assert_eq!(vw.mul(&vw).mul(&vw), Multivector::one(3));
        assert_ne!(vw, Multivector::one(3));
    }

    #[test]
    fn distant_generators_anticommute() {
        let v = Multivector::generator(4, 1);
        let w = Multivector::generator(4, 3);
        assert_eq!(v.mul(&w), w.mul(&v).neg());
    }

    #[test]
    fn blade_signs() {
        // e1 e2 = e12, e2 e1 = -e12
        assert_eq!(blade_sign(0b01, 0b10), 1);
        assert_eq!(blade_sign(0b10, 0b01), -1);
        // e12 e12 = -1
        assert_eq!(blade_sign(0b11, 0b11), -1);
    }
}
