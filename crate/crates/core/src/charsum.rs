//! The auxiliary character sums behind the weight formulas, each computed two
//! ways: a plain double loop over `F* × F`, and a case table in terms of the
//! root sets `Υ₁` and `Υ₂`.
//!
//! ```text
//! S1 = Σ_{x≠0} Σ_y (-1)^{Tr(axy + bx)}
//! S2 = Σ_{x≠0} Σ_y (-1)^{Tr(yx² + y) + Tr(axy + bx)}
//! S3 = Σ_{x≠0} Σ_y (-1)^{Tr(yx² + x + y) + Tr(axy + bx)}
//! S4 = Σ_{x≠0} Σ_y (-1)^{Tr(yx² + xy) + Tr(axy + bx)}
//! ```
//!
//! Some closed forms fix the value only up to sign (`±2^{m+1}`); those are
//! reported as ambiguous and conformance means membership in the pair.

use alloc::vec::Vec;
use core::fmt;

use crate::code::Family;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SumKind {
    S1,
    S2,
    S3,
    S4,
}

impl SumKind {
    pub const ALL: [SumKind; 4] = [SumKind::S1, SumKind::S2, SumKind::S3, SumKind::S4];

    /// The sum that pairs with `S1` in a family's weight formula.
    pub fn for_family(family: Family) -> SumKind {
        match family {
            Family::One => SumKind::S2,
            Family::Two => SumKind::S3,
            Family::Three => SumKind::S4,
        }
    }

    fn defining_family(self) -> Option<Family> {
        match self {
            SumKind::S1 => None,
            SumKind::S2 => Some(Family::One),
            SumKind::S3 => Some(Family::Two),
            SumKind::S4 => Some(Family::Three),
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumKind::S1 => "S1",
            SumKind::S2 => "S2",
            SumKind::S3 => "S3",
            SumKind::S4 => "S4",
        })
    }
}

/// A closed-form value; `ambiguous` means "`value` or `-value`".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharSumValue {
    pub value: i64,
    pub ambiguous: bool,
}

impl CharSumValue {
    pub fn exact(value: i64) -> Self {
        CharSumValue {
            value,
            ambiguous: false,
        }
    }

    pub fn either_sign(magnitude: i64) -> Self {
        CharSumValue {
            value: magnitude.abs(),
            ambiguous: true,
        }
    }

    pub fn admits(&self, x: i64) -> bool {
        if self.ambiguous {
            x == self.value || x == -self.value
        } else {
            x == self.value
        }
    }

    /// Admissible values in increasing order.
    pub fn candidates(&self) -> Vec<i64> {
        if self.ambiguous && self.value != 0 {
            alloc::vec![-self.value, self.value]
        } else {
            alloc::vec![self.value]
        }
    }
}

/// Which row of a closed-form case table applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// `a = 0, b ≠ 0` (sign driven by `Tr(b)` where relevant).
    AZero { tr_b: u8 },
    /// `S1` with `a ≠ 0`.
    ANonzero,
    /// `a ∉ Υ₁ ∪ {0}`.
    OutsideUpsilon1,
    /// `a ∈ Υ₁, b = 0` (S2).
    Upsilon1BZero,
    /// `a ∈ Υ₁` with the governing trace bit (`Tr(ab)` for S2,
    /// `Tr((b+1)a)` for S3).
    Upsilon1 { tr: u8 },
    /// `a = 1` (S4).
    AOne,
    /// `a ∈ Υ₂` with `Tr((a+1)b)`.
    Upsilon2 { tr: u8 },
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::AZero { tr_b } => write!(f, "a=0,b!=0,Tr(b)={tr_b}"),
            Case::ANonzero => f.write_str("a!=0"),
            Case::OutsideUpsilon1 => f.write_str("a not in U1+{0}"),
            Case::Upsilon1BZero => f.write_str("a in U1,b=0"),
            Case::Upsilon1 { tr } => write!(f, "a in U1,trace={tr}"),
            Case::AOne => f.write_str("a=1"),
            Case::Upsilon2 { tr } => write!(f, "a in U2,Tr((a+1)b)={tr}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: Case,
    pub value: CharSumValue,
}

/// Nonzero roots of `x² + ax + 1`, found by scanning `F*`.
///
/// When present they are `(r, r⁻¹)` with `r < r⁻¹` in integer order.
pub fn quad_roots(
    ctx: &FieldContext,
    a: FieldElement,
) -> Result<Option<(FieldElement, FieldElement)>> {
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let mut roots = ctx
        .nonzero_elements()
        .filter(|&x| (ctx.square(x) + ctx.mul(a, x) + FieldElement::ONE).is_zero());
    Ok(match (roots.next(), roots.next()) {
        (Some(r1), Some(r2)) => Some((r1, r2)),
        (None, None) => None,
        // a ≠ 0 rules out the double root x = 1
        _ => unreachable!("x^2 + ax + 1 with a != 0 has 0 or 2 roots"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonSets {
    /// `{r + r⁻¹ : r ∈ F* ∖ {1}}`, sorted.
    pub upsilon1: Vec<FieldElement>,
    /// `F* ∖ {1}`, sorted.
    pub upsilon2: Vec<FieldElement>,
}

pub fn upsilon_sets(ctx: &FieldContext) -> UpsilonSets {
    let mut upsilon1: Vec<FieldElement> = ctx
        .nonzero_elements()
        .filter(|&r| r != FieldElement::ONE)
        .map(|r| r + ctx.inv(r).expect("nonzero"))
        .collect();
    upsilon1.sort_unstable();
    upsilon1.dedup();
    let upsilon2 = ctx
        .nonzero_elements()
        .filter(|&a| a != FieldElement::ONE)
        .collect();
    UpsilonSets { upsilon1, upsilon2 }
}

/// `|{(e, b) ∈ E × F* : Tr(eb) = i}|` by enumeration.
pub fn t_count(ctx: &FieldContext, set: &[FieldElement], i: u8) -> u64 {
    set.iter()
        .map(|&e| {
            ctx.nonzero_elements()
                .filter(|&b| ctx.trace(ctx.mul(e, b)) == i)
                .count() as u64
        })
        .sum()
}

/// Direct double loop; no algebraic shortcuts.
pub fn oracle(ctx: &FieldContext, kind: SumKind, a: FieldElement, b: FieldElement) -> i64 {
    let family = kind.defining_family();
    let mut total = 0i64;
    for x in ctx.nonzero_elements() {
        let bx = ctx.mul(b, x);
        for y in ctx.elements() {
            let mut arg = ctx.mul(a, ctx.mul(x, y)) + bx;
            if let Some(fam) = family {
                arg += fam.condition(ctx, x, y);
            }
            total += ctx.character(arg);
        }
    }
    total
}

pub fn s1(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> i64 {
    oracle(ctx, SumKind::S1, a, b)
}

pub fn s2(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> i64 {
    oracle(ctx, SumKind::S2, a, b)
}

pub fn s3(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> i64 {
    oracle(ctx, SumKind::S3, a, b)
}

pub fn s4(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> i64 {
    oracle(ctx, SumKind::S4, a, b)
}

/// Case tables for one field, with `Υ₁` membership precomputed.
#[derive(Clone, Debug)]
pub struct LemmaTable {
    ctx: FieldContext,
    in_upsilon1: Vec<bool>,
}

impl LemmaTable {
    pub fn new(ctx: &FieldContext) -> Self {
        let mut in_upsilon1 = alloc::vec![false; ctx.order() as usize];
        for a in ctx.nonzero_elements() {
            in_upsilon1[a.bits() as usize] = quad_roots(ctx, a).expect("a != 0").is_some();
        }
        LemmaTable {
            ctx: *ctx,
            in_upsilon1,
        }
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn in_upsilon1(&self, a: FieldElement) -> bool {
        self.in_upsilon1[a.bits() as usize]
    }

    pub fn closed(&self, kind: SumKind, a: FieldElement, b: FieldElement) -> Result<ClosedForm> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPair);
        }
        let ctx = &self.ctx;
        let m = ctx.degree();
        let q = 1i64 << m;
        let tr_b = ctx.trace(b);
        let sign = |bit: u8| if bit == 0 { q } else { -q };
        let (case, value) = match kind {
            SumKind::S1 if a.is_zero() => (Case::AZero { tr_b }, CharSumValue::exact(-q)),
            SumKind::S1 => (Case::ANonzero, CharSumValue::exact(0)),

            SumKind::S2 if a.is_zero() => (Case::AZero { tr_b }, CharSumValue::exact(sign(tr_b))),
            SumKind::S2 if !self.in_upsilon1(a) => (Case::OutsideUpsilon1, CharSumValue::exact(0)),
            SumKind::S2 if b.is_zero() => (Case::Upsilon1BZero, CharSumValue::exact(2 * q)),
            SumKind::S2 => {
                let tr = ctx.trace(ctx.mul(a, b));
                let v = if tr == 1 {
                    CharSumValue::exact(0)
                } else {
                    CharSumValue::either_sign(2 * q)
                };
                (Case::Upsilon1 { tr }, v)
            }

            SumKind::S3 if m.is_multiple_of(2) => return Err(Error::EvenDegree(m)),
            SumKind::S3 if a.is_zero() => (Case::AZero { tr_b }, CharSumValue::exact(-sign(tr_b))),
            SumKind::S3 if !self.in_upsilon1(a) => (Case::OutsideUpsilon1, CharSumValue::exact(0)),
            SumKind::S3 => {
                let tr = ctx.trace(ctx.mul(b + FieldElement::ONE, a));
                let v = if tr == 1 {
                    CharSumValue::exact(0)
                } else {
                    CharSumValue::either_sign(2 * q)
                };
                (Case::Upsilon1 { tr }, v)
            }

            SumKind::S4 if a == FieldElement::ONE => (Case::AOne, CharSumValue::exact(0)),
            SumKind::S4 if a.is_zero() => (Case::AZero { tr_b }, CharSumValue::exact(sign(tr_b))),
            SumKind::S4 => {
                let tr = ctx.trace(ctx.mul(a + FieldElement::ONE, b));
                (Case::Upsilon2 { tr }, CharSumValue::exact(sign(tr)))
            }
        };
        Ok(ClosedForm { case, value })
    }

    pub fn check(&self, kind: SumKind, a: FieldElement, b: FieldElement) -> Result<CaseCheck> {
        let closed = self.closed(kind, a, b)?;
        let oracle = oracle(&self.ctx, kind, a, b);
        Ok(CaseCheck {
            kind,
            a,
            b,
            oracle,
            closed,
            matches: closed.value.admits(oracle),
        })
    }

    /// Every `b` for one fixed `a`, skipping `(0, 0)`.
    pub fn check_row(&self, kind: SumKind, a: FieldElement) -> Result<Vec<CaseCheck>> {
        self.ctx
            .elements()
            .filter(|&b| !(a.is_zero() && b.is_zero()))
            .map(|b| self.check(kind, a, b))
            .collect()
    }

    /// Every `(a, b) ≠ (0, 0)`.
    pub fn sweep(&self, kind: SumKind) -> Result<Vec<CaseCheck>> {
        let mut out = Vec::new();
        for a in self.ctx.elements() {
            out.extend(self.check_row(kind, a)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseCheck {
    pub kind: SumKind,
    pub a: FieldElement,
    pub b: FieldElement,
    pub oracle: i64,
    pub closed: ClosedForm,
    pub matches: bool,
}

pub fn s1_closed(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> Result<CharSumValue> {
    LemmaTable::new(ctx)
        .closed(SumKind::S1, a, b)
        .map(|c| c.value)
}

pub fn s2_closed(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> Result<CharSumValue> {
    LemmaTable::new(ctx)
        .closed(SumKind::S2, a, b)
        .map(|c| c.value)
}

pub fn s3_closed(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> Result<CharSumValue> {
    LemmaTable::new(ctx)
        .closed(SumKind::S3, a, b)
        .map(|c| c.value)
}

pub fn s4_closed(ctx: &FieldContext, a: FieldElement, b: FieldElement) -> Result<CharSumValue> {
    LemmaTable::new(ctx)
        .closed(SumKind::S4, a, b)
        .map(|c| c.value)
}

/// Weight of `c(a, b)` in a code of length `n` from `S1` and the family's
/// paired sum: `(2n - S1 - S) / 4`.
pub fn weight_from_sums(n: usize, s1: i64, paired: i64) -> Result<usize> {
    let num = 2 * n as i64 - s1 - paired;
    if num < 0 || num % 4 != 0 {
        return Err(Error::InconsistentDistribution(
            "character sums do not give an integral weight",
        ));
    }
    Ok((num / 4) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{codeword, enumerate_defining_set};

    fn ctx(m: u32) -> FieldContext {
        FieldContext::with_default(m).unwrap()
    }

    const fn fe(bits: u32) -> FieldElement {
        FieldElement::from_bits(bits)
    }

    #[test]
    fn roots_of_quadratics() {
        let f4 = ctx(2);
        assert_eq!(quad_roots(&f4, fe(1)), Ok(Some((fe(0b10), fe(0b11)))));
        assert_eq!(quad_roots(&ctx(3), fe(1)), Ok(None));
        assert_eq!(quad_roots(&f4, fe(0)), Err(Error::ZeroCoefficient));
        for m in 2..=8 {
            let c = ctx(m);
            let ups = upsilon_sets(&c);
            for a in c.nonzero_elements() {
                let roots = quad_roots(&c, a).unwrap();
                assert_eq!(roots.is_some(), ups.upsilon1.binary_search(&a).is_ok());
                if let Some((r1, r2)) = roots {
                    assert_eq!(r1 + r2, a);
                    assert_eq!(c.mul(r1, r2), FieldElement::ONE);
                }
            }
        }
    }

    #[test]
    fn upsilon_sizes() {
        assert_eq!(upsilon_sets(&ctx(2)).upsilon1, [fe(1)]);
        assert_eq!(upsilon_sets(&ctx(2)).upsilon2, [fe(2), fe(3)]);
        assert_eq!(upsilon_sets(&ctx(3)).upsilon1.len(), 3);
        for m in 2..=10 {
            let u = upsilon_sets(&ctx(m));
            assert_eq!(u.upsilon1.len(), (1 << (m - 1)) - 1);
            assert_eq!(u.upsilon2.len(), (1 << m) - 2);
        }
    }

    #[test]
    fn t_counts() {
        let f4 = ctx(2);
        assert_eq!(t_count(&f4, &[fe(1)], 0), 1);
        assert_eq!(t_count(&f4, &[fe(1)], 1), 2);
        assert_eq!(t_count(&f4, &[], 0), 0);
        assert_eq!(t_count(&f4, &[], 1), 0);
        for m in 2..=7 {
            let c = ctx(m);
            let e: Vec<FieldElement> = c.nonzero_elements().step_by(3).collect();
            let len = e.len() as u64;
            assert_eq!(t_count(&c, &e, 0), len * ((1 << (m - 1)) - 1));
            assert_eq!(t_count(&c, &e, 1), len << (m - 1));
        }
    }

    #[test]
    fn listed_values() {
        let f4 = ctx(2);
        let f8 = ctx(3);
        let w = fe(0b10);
        assert_eq!(s1(&f4, fe(0), fe(1)), -4);
        assert_eq!(s1(&f4, fe(1), fe(0)), 0);
        assert_eq!(s1(&f8, fe(0b10), fe(0b100)), 0);
        assert_eq!(s1(&f4, fe(0), fe(0)), 3 * 4);
        assert_eq!(s2(&f4, fe(1), fe(0)), 8);
        assert_eq!(s2(&f8, fe(0), fe(1)), -8);
        assert_eq!(s3(&f8, fe(0), fe(1)), 8);
        assert_eq!(s4(&f4, fe(1), w), 0);
        assert_eq!(s4(&f4, fe(0), w), -4);
        assert_eq!(s4(&f8, fe(0b10), fe(0)), 8);

        assert_eq!(s1_closed(&f4, fe(0), fe(1)), Ok(CharSumValue::exact(-4)));
        assert_eq!(s2_closed(&f4, fe(1), fe(0)), Ok(CharSumValue::exact(8)));
        assert_eq!(s3_closed(&f4, fe(1), fe(0)), Err(Error::EvenDegree(2)));
        assert_eq!(s4_closed(&f8, fe(0b10), fe(0)), Ok(CharSumValue::exact(8)));
        assert_eq!(s1_closed(&f4, fe(0), fe(0)), Err(Error::ZeroPair));
    }

    #[test]
    fn ambiguous_cases() {
        // m = 2, a = 1: b ≠ 0 with Tr(b) = 0 and Tr(ab) = 0 is b = 1
        let f4 = ctx(2);
        let v = s2_closed(&f4, fe(1), fe(1)).unwrap();
        assert!(v.ambiguous);
        assert_eq!(v.candidates(), [-8, 8]);
        assert!(v.admits(s2(&f4, fe(1), fe(1))));

        let f8 = ctx(3);
        let table = LemmaTable::new(&f8);
        for a in upsilon_sets(&f8).upsilon1 {
            for b in f8.elements() {
                if f8.trace(f8.mul(b + FieldElement::ONE, a)) == 0 {
                    let c = table.closed(SumKind::S3, a, b).unwrap();
                    assert_eq!(c.value.candidates(), [-16, 16]);
                    assert!(c.value.admits(s3(&f8, a, b)));
                }
            }
        }
        for a in f8.nonzero_elements().filter(|&a| !table.in_upsilon1(a)) {
            for b in f8.elements() {
                assert_eq!(s3(&f8, a, b), 0);
            }
        }
    }

    #[test]
    fn sweeps_small_fields() {
        for m in 2..=4 {
            let table = LemmaTable::new(&ctx(m));
            for kind in SumKind::ALL {
                if kind == SumKind::S3 && m % 2 == 0 {
                    assert_eq!(table.sweep(kind), Err(Error::EvenDegree(m)));
                    continue;
                }
                let checks = table.sweep(kind).unwrap();
                assert_eq!(checks.len(), (1 << (2 * m)) - 1);
                assert!(checks.iter().all(|c| c.matches), "{kind} at m = {m}");
            }
        }
    }

    #[test]
    fn weights_from_character_sums() {
        for m in 2..=5 {
            let c = ctx(m);
            for fam in Family::ALL {
                let set = enumerate_defining_set(&c, fam);
                let paired = SumKind::for_family(fam);
                for a in c.elements() {
                    for b in c.elements() {
                        let got =
                            weight_from_sums(set.len(), s1(&c, a, b), oracle(&c, paired, a, b))
                                .unwrap();
                        assert_eq!(got, codeword(&c, &set, a, b).weight(), "family {fam} m {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn family_one_weight_formula() {
        // wt = 2^{2m-2} - S1/4 - S2/4
        for m in 2..=5 {
            let c = ctx(m);
            let set = enumerate_defining_set(&c, Family::One);
            for a in c.elements() {
                for b in c.elements() {
                    if a.is_zero() && b.is_zero() {
                        continue;
                    }
                    let wt = (1i64 << (2 * m - 2)) - s1(&c, a, b) / 4 - s2(&c, a, b) / 4;
                    assert_eq!(wt, codeword(&c, &set, a, b).weight() as i64);
                }
            }
        }
    }
}
