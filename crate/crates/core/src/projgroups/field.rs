use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_CHARACTERISTIC: u32 = 13;
/// Largest supported field order.
pub const MAX_ORDER: u32 = 64;

/// Fixed defining polynomials, coefficients from the constant term up to
/// the leading 1. Every entry is primitive, so `x` generates the
/// multiplicative group.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),             // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),          // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),       // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]),    // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]), // x^6 + x^4 + x^3 + x + 1
    (3, 2, &[2, 1, 1]),             // x^2 + x + 2
    (3, 3, &[1, 2, 0, 1]),          // x^3 + 2x + 1
    (5, 2, &[2, 4, 1]),             // x^2 + 4x + 2
    (7, 2, &[3, 6, 1]),             // x^2 + 6x + 3
];

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// A field with at most 64 elements.
///
/// Elements are numbered `0..q` by reading their coefficient vector with
/// respect to `1, x, x^2, ...` as base-p digits, least significant first.
/// In particular `x` itself is element `p` when `e > 1`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    primitive: usize,
    /// `powers[j] = primitive^j` for `j` in `0..q-1`.
    powers: Vec<usize>,
    log: Vec<Option<usize>>,
}

impl FiniteField {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let too_large = Error::FieldTooLarge { p, e };
        if e == 0 || p > MAX_CHARACTERISTIC {
            return Err(too_large);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(too_large)? as usize;
        let modulus: Vec<u32> = if e == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(mp, me, _)| *mp == p && *me == e)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(Error::FieldTooLarge { p, e })?
        };

        let digits = |mut a: usize| -> Vec<u32> {
            (0..e)
                .map(|_| {
                    let d = (a % p as usize) as u32;
                    a /= p as usize;
                    d
                })
                .collect()
        };
        let number = |coeffs: &[u32]| -> usize {
            coeffs
                .iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&sum) as u8;

                let mut prod = vec![0u32; 2 * e as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // Reduce modulo the monic modulus from the top down.
                for deg in (e as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    let shift = deg - e as usize;
                    for (i, m) in modulus.iter().enumerate() {
                        prod[shift + i] = (prod[shift + i] + (p - c) * m) % p;
                    }
                }
                mul[a * q + b] = number(&prod[..e as usize]) as u8;
            }
        }

        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            primitive: 0,
            powers: Vec::new(),
            log: Vec::new(),
        };
        field.primitive = (1..q)
            .find(|&a| field.multiplicative_order(a) == Some(q - 1))
            .expect("fixed moduli are irreducible");
        let mut powers = Vec::with_capacity(q - 1);
        let mut log = vec![None; q];
        let mut x = 1;
        for j in 0..q - 1 {
            powers.push(x);
            log[x] = Some(j);
            x = field.mul(x, field.primitive);
        }
        field.powers = powers;
        field.log = log;
        Ok(field)
    }

    /// The field with `q` elements.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        let j = self.log[a]?;
        Some(self.powers[(self.q - 1 - j) % (self.q - 1)])
    }

    pub fn div(&self, a: usize, b: usize) -> Option<usize> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return None;
            }
        }
        Some(k)
    }

    /// Least element generating the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        self.primitive
    }

    /// `primitive^j`.
    pub fn primitive_power(&self, j: usize) -> usize {
        self.powers[j % (self.q - 1)]
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: usize) -> Option<usize> {
        self.log[a]
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_helpers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn prime_field_f5() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.primitive_element(), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), Some(3));
    }

    #[test]
    fn f8_uses_x3_x_1() {
        let f = FiniteField::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        // x is element 2 and generates all 7 nonzero elements.
        assert_eq!(f.primitive_element(), 2);
        assert_eq!(f.multiplicative_order(2), Some(7));
        // x^3 = x + 1
        assert_eq!(f.pow(2, 3), 3);
    }

    #[test]
    fn f9_modulus() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[2, 1, 1]);
        assert_eq!(f.primitive_element(), 3);
        // x^4 = -1 = 2
        assert_eq!(f.pow(3, 4), 2);
    }

    #[test]
    fn every_supported_modulus_is_primitive() {
        for &(p, e, _) in MODULI {
            let f = FiniteField::new(p, e).unwrap();
            assert_eq!(f.primitive_element(), p as usize, "F_{p}^{e}");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FiniteField::new(2, 7).unwrap_err(),
            Error::FieldTooLarge { p: 2, e: 7 }
        );
        assert_eq!(
            FiniteField::new(17, 1).unwrap_err(),
            Error::FieldTooLarge { p: 17, e: 1 }
        );
        assert_eq!(
            FiniteField::with_order(6).unwrap_err(),
            Error::NotPrimePower(6)
        );
    }

    #[test]
    fn frobenius_has_order_e() {
        for q in [4, 8, 9, 27, 64] {
            let f = FiniteField::with_order(q).unwrap();
            let e = f.extension_degree();
            for a in 0..f.order() {
                let mut x = a;
                for _ in 0..e {
                    x = f.frobenius(x);
                }
                assert_eq!(x, a);
            }
            let moved = (0..f.order()).any(|a| f.frobenius(a) != a);
            assert!(moved);
        }
    }
}
