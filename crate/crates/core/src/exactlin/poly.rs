//! Univariate polynomials over GF(p), with just enough factoring to find a
//! proper factor of a squarefree polynomial (distinct-degree splitting
//! followed by Cantor-Zassenhaus).

use rand::Rng;

use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::Result;

/// Coefficients from the constant term up; never carries trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.p();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::new(field, vec![1])
    }

    /// The monomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Poly::new(field, vec![0, 1])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .map(|&c| self.field.mul(c, inv))
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                f.add(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *other.coeffs.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        self.add(&Poly::new(
            f,
            other.coeffs.iter().map(|&c| f.neg(c)).collect(),
        ))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(a, b, c[i + j]);
            }
        }
        Poly::new(f, c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = self.field;
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        if r.len() < dl {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut q = vec![0u32; r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let c = f.mul(r[i + dl - 1], inv);
            q[i] = c;
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i + j] = f.mul_add(neg, dc, r[i + j]);
            }
        }
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let g = self.gcd(other);
        self.mul(other).divrem(&g).0.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        Poly::new(f, c)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        let f = self.field;
        let n = a.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&Matrix::identity(f, n).scale(c))?;
        }
        Ok(acc)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Poly {
        let f = self.field;
        if self.degree().unwrap_or(0) == 0 {
            return Poly::one(f);
        }
        let d = self.derivative();
        let g = self.gcd(&d);
        // Irreducible factors whose multiplicity is prime to p.
        let s = self.divrem(&g).0.monic();
        // Strip those factors from g; what remains is a p-th power.
        let mut rest = g;
        loop {
            let c = rest.gcd(&s);
            if c.degree() == Some(0) {
                break;
            }
            rest = rest.divrem(&c).0;
        }
        if rest.degree().unwrap_or(0) == 0 {
            return s;
        }
        let p = f.p() as usize;
        let root = Poly::new(f, rest.coeffs.iter().step_by(p).copied().collect());
        s.mul(&root.radical()).monic()
    }

    /// A proper monic factor of a squarefree polynomial, or `None` when it
    /// is irreducible (or constant).
    pub fn proper_factor<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Poly> {
        let f = self.field;
        let s = self.monic();
        let n = s.degree()?;
        if n <= 1 {
            return None;
        }
        let x = Poly::x(f);
        let mut h = x.clone();
        let mut k = 1;
        while 2 * k <= n {
            h = h.powmod(f.p() as u64, &s);
            let g = h.sub(&x).gcd(&s);
            if g.degree() != Some(0) {
                if g != s {
                    return Some(g);
                }
                // Every irreducible factor has degree k.
                return Some(equal_degree_split(&s, k, rng));
            }
            k += 1;
        }
        None
    }

    /// Whether the polynomial is a power of a single irreducible.
    pub fn is_primary<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        self.radical().proper_factor(rng).is_none()
    }
}

/// Cantor-Zassenhaus splitting of a squarefree `s` whose irreducible factors
/// all have degree `k` (and of which there are at least two).
fn equal_degree_split<R: Rng + ?Sized>(s: &Poly, k: usize, rng: &mut R) -> Poly {
    let f = s.field;
    let p = f.p() as u64;
    let n = s.degree().expect("nonzero");
    loop {
        let a = Poly::new(f, (0..n).map(|_| rng.gen_range(0..f.p())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(s);
        if g.degree() != Some(0) && g != *s {
            return g;
        }
        let b = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(k-1)).
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..k {
                t = t.mul(&t).rem(s);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^k - 1)/2) = (a^(1 + p + ... + p^(k-1)))^((p-1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..k {
                frob = frob.powmod(p, s);
                norm = norm.mul(&frob).rem(s);
            }
            norm.powmod((p - 1) / 2, s).sub(&Poly::one(f))
        };
        let g = b.gcd(s);
        if g.degree().is_some_and(|d| d > 0) && g != *s {
            return g;
        }
    }
}
