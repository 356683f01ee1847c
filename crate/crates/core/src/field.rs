//! Arithmetic in GF(2^m), `2 <= m <= 16`, in the polynomial basis
//! `{1, α, α², …, α^{m-1}}`.
//!
//! Elements are bitmasks: bit `i` is the coefficient of `α^i`. Addition is
//! XOR, multiplication is shift-and-reduce against the context's reduction
//! polynomial.

use core::fmt;
use core::ops::{Add, AddAssign};

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Lexicographically smallest irreducible polynomial of each degree 2..=16.
const DEFAULT_POLYS: [u32; 15] = [
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0b1_0001_1011,
    0b10_0000_0011,
    0b100_0000_1001,
    0b1000_0000_0101,
    0b1_0000_0000_1001,
    0b10_0000_0001_1011,
    0b100_0000_0010_0001,
    0b1000_0000_0000_0011,
    0b1_0000_0000_0010_1011,
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps raw coefficient bits. Use [`FieldContext::element`] when the
    /// bits come from outside and need range checking.
    pub const fn from_bits(bits: u32) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Degree of a nonzero GF(2) polynomial given as a bitmask.
fn degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(poly: u32) -> bool {
    if poly < 2 {
        return false;
    }
    let p = u64::from(poly);
    let deg = degree(p);
    if deg == 0 {
        return false;
    }
    let max_div_deg = deg / 2;
    let mut d: u64 = 2;
    while degree(d) <= max_div_deg {
        if poly_rem(p, d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Immutable description of GF(2^m). All arithmetic goes through it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldContext {
    m: u32,
    poly: u32,
    // bit i = Tr(α^i); makes the trace a masked parity
    trace_mask: u32,
}

impl FieldContext {
    /// Builds GF(2^m) over `poly`, or over the built-in default polynomial
    /// when `poly` is `None`.
    pub fn new(m: u32, poly: Option<u32>) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::RejectsDegree(m));
        }
        let poly = match poly {
            None => DEFAULT_POLYS[(m - MIN_DEGREE) as usize],
            Some(p) => {
                if p == 0 || degree(u64::from(p)) != m {
                    return Err(Error::PolynomialDegree { m, poly: p });
                }
                if !is_irreducible(p) {
                    return Err(Error::RejectsReducible(p));
                }
                p
            }
        };
        let mut ctx = FieldContext {
            m,
            poly,
            trace_mask: 0,
        };
        let mut mask = 0;
        for i in 0..m {
            if ctx.trace_by_conjugates(FieldElement(1 << i)) == 1 {
                mask |= 1 << i;
            }
        }
        ctx.trace_mask = mask;
        Ok(ctx)
    }

    pub fn with_default(m: u32) -> Result<Self> {
        Self::new(m, None)
    }

    pub fn default_polynomial(m: u32) -> Option<u32> {
        (MIN_DEGREE..=MAX_DEGREE)
            .contains(&m)
            .then(|| DEFAULT_POLYS[(m - MIN_DEGREE) as usize])
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn reduction_poly(&self) -> u32 {
        self.poly
    }

    /// Number of field elements, `2^m`.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn element(&self, bits: u32) -> Option<FieldElement> {
        (bits < self.order()).then_some(FieldElement(bits))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order()).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.order()).map(FieldElement)
    }

    /// The polynomial basis element `α^j`.
    pub fn basis(&self, j: u32) -> FieldElement {
        debug_assert!(j < self.m);
        FieldElement(1 << j)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let top = 1u32 << self.m;
        let mut x = a.0;
        let mut y = b.0;
        let mut acc = 0;
        while y != 0 {
            if y & 1 != 0 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.poly;
            }
        }
        FieldElement(acc)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// `a^(2^m - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, u64::from(self.order()) - 2))
    }

    /// Absolute trace as a bit, evaluated through the precomputed linear mask.
    pub fn trace(&self, a: FieldElement) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Absolute trace straight from the definition `a + a² + … + a^{2^{m-1}}`.
    pub fn trace_by_conjugates(&self, a: FieldElement) -> u8 {
        let mut sum = FieldElement::ZERO;
        let mut conj = a;
        for _ in 0..self.m {
            sum += conj;
            conj = self.square(conj);
        }
        debug_assert!(sum.0 <= 1, "trace must land in GF(2)");
        sum.0 as u8
    }

    /// `(-1)^{Tr(a)}`.
    pub fn character(&self, a: FieldElement) -> i64 {
        1 - 2 * i64::from(self.trace(a))
    }
}
