//! Closed-form span-10 labelings of `C_m ⊠^σℓ C_n` for qualifying shifts.
//!
//! When `11 | n` and the shift satisfies `ℓ ≡ (-1)^a·4m (mod 11)` the
//! labeling `f_a(i, j) = (2i + (4+a)j) mod 11` works; when
//! `ℓ ≡ (-1)^a·3m (mod 11)` the labeling `g_a(i, j) = ((4+a)i + 2j) mod 11`
//! does. Together with the degree lower bound this pins `λ = 10`.
//!
//! Because `n` is a multiple of 11, `{(11k + c) mod n : k ∈ ℤ}` is exactly
//! the set of shifts in `[0, n)` congruent to `c` modulo 11, so the
//! existential `k` never has to be searched for.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeling::Labeling;

pub const MODULUS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
}

/// One of the four closed-form labelings `f1`, `f2`, `g1`, `g2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Formula {
    family: Family,
    a: u8,
}

impl Formula {
    pub const F1: Formula = Formula {
        family: Family::F,
        a: 1,
    };
    pub const F2: Formula = Formula {
        family: Family::F,
        a: 2,
    };
    pub const G1: Formula = Formula {
        family: Family::G,
        a: 1,
    };
    pub const G2: Formula = Formula {
        family: Family::G,
        a: 2,
    };

    /// Tie-breaking order used by classification.
    pub const ALL: [Formula; 4] = [Self::F1, Self::F2, Self::G1, Self::G2];

    pub fn new(family: Family, a: u8) -> Option<Formula> {
        matches!(a, 1 | 2).then_some(Formula { family, a })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn a(self) -> u8 {
        self.a
    }

    /// `(base coefficient, fiber coefficient)` of the linear form.
    pub fn coefficients(self) -> (i64, i64) {
        let c = 4 + self.a as i64;
        match self.family {
            Family::F => (2, c),
            Family::G => (c, 2),
        }
    }

    /// Residue modulo 11 that the shift must have for this formula to apply.
    pub fn required_residue(self, m: usize) -> usize {
        let factor = match self.family {
            Family::F => 4,
            Family::G => 3,
        };
        let sign = if self.a == 1 { -1 } else { 1 };
        (sign * factor * m as i64).rem_euclid(MODULUS as i64) as usize
    }

    pub fn eval(self, i: usize, j: usize) -> u32 {
        let (ci, cj) = self.coefficients();
        let i = (i % MODULUS) as i64;
        let j = (j % MODULUS) as i64;
        (ci * i + cj * j).rem_euclid(MODULUS as i64) as u32
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::F => 'f',
            Family::G => 'g',
        };
        write!(f, "{fam}{}", self.a)
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            "g1" => Ok(Self::G1),
            "g2" => Ok(Self::G2),
            other => Err(Error::Parse(format!("unknown formula {other:?}"))),
        }
    }
}

/// Outcome of classifying a shift. `formula` is `None` for unqualified shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftClass {
    pub formula: Option<Formula>,
    pub residue: usize,
}

impl ShiftClass {
    pub fn is_qualified(&self) -> bool {
        self.formula.is_some()
    }
}

fn check_instance(m: usize, n: usize, shift: usize) -> Result<()> {
    for len in [m, n] {
        if len < 3 {
            return Err(Error::CycleTooShort(len));
        }
    }
    if shift >= n {
        return Err(Error::ShiftOutOfRange { shift, n });
    }
    Ok(())
}

/// Picks the first formula, in `f1, f2, g1, g2` order, whose congruence the
/// shift satisfies. Unqualified whenever `n` is not a multiple of 11.
pub fn classify_shift(m: usize, n: usize, shift: usize) -> Result<ShiftClass> {
    check_instance(m, n, shift)?;
    let residue = shift % MODULUS;
    let formula = if n.is_multiple_of(MODULUS) {
        Formula::ALL
            .into_iter()
            .find(|f| f.required_residue(m) == residue)
    } else {
        None
    };
    Ok(ShiftClass { formula, residue })
}

/// All shifts in `[0, n)` that qualify for `C_m ⊠^σℓ C_n`, ascending.
pub fn qualifying_shifts(m: usize, n: usize) -> Result<Vec<(usize, Formula)>> {
    check_instance(m, n, 0)?;
    let mut out = Vec::new();
    for shift in 0..n {
        if let Some(f) = classify_shift(m, n, shift)?.formula {
            out.push((shift, f));
        }
    }
    Ok(out)
}

/// A bundle instance paired with the formula to label it with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaParams {
    m: usize,
    n: usize,
    shift: usize,
    formula: Formula,
    forced: bool,
}

impl FormulaParams {
    /// Uses the formula chosen by [`classify_shift`]; fails on unqualified shifts.
    pub fn classified(m: usize, n: usize, shift: usize) -> Result<Self> {
        let class = classify_shift(m, n, shift)?;
        let formula = class
            .formula
            .ok_or(Error::UnqualifiedShift { m, n, shift })?;
        Ok(FormulaParams {
            m,
            n,
            shift,
            formula,
            forced: false,
        })
    }

    /// Applies `formula` regardless of whether the shift qualifies for it.
    /// The resulting labeling carries no guarantee.
    pub fn forced(m: usize, n: usize, shift: usize, formula: Formula) -> Result<Self> {
        check_instance(m, n, shift)?;
        let class = classify_shift(m, n, shift)?;
        let matches = n.is_multiple_of(MODULUS) && formula.required_residue(m) == class.residue;
        Ok(FormulaParams {
            m,
            n,
            shift,
            formula,
            forced: !matches,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn formula(&self) -> Formula {
        self.formula
    }

    /// True when the formula was imposed on a shift it does not qualify for.
    pub fn is_forced(&self) -> bool {
        self.forced
    }
}

/// Label of vertex `(i, j)` under the instance's formula, in `0..=10`.
pub fn closed_form_label(params: &FormulaParams, i: usize, j: usize) -> Result<u32> {
    if i >= params.m || j >= params.n {
        return Err(Error::CoordinateOutOfRange {
            i,
            j,
            m: params.m,
            n: params.n,
        });
    }
    Ok(params.formula.eval(i, j))
}

/// Full labeling in row-major vertex order.
pub fn generate_labeling(params: &FormulaParams) -> Labeling {
    let n = params.n;
    Labeling::new(
        (0..params.m * n)
            .map(|v| params.formula.eval(v / n, v % n))
            .collect(),
    )
}

fn abs_mod(x: i64) -> u32 {
    (x.abs() % MODULUS as i64) as u32
}

/// `|c_i·i' + c_j·j'| mod 11` over all neighbor offsets `i', j' ∈ {-1, 0, 1}`,
/// not both zero.
pub fn adjacent_offset_residues(formula: Formula) -> BTreeSet<u32> {
    let (ci, cj) = formula.coefficients();
    offsets(1)
        .map(|(di, dj)| abs_mod(ci * di + cj * dj))
        .collect()
}

/// `|c_i·i'' + c_j·j''| mod 11` over the distance-2 offsets of a strong
/// product, i.e. `i'', j'' ∈ {-2, ..., 2}` with at least one of them `±2`.
pub fn distance2_offset_residues(formula: Formula) -> BTreeSet<u32> {
    let (ci, cj) = formula.coefficients();
    offsets(2)
        .filter(|&(di, dj)| di.abs() == 2 || dj.abs() == 2)
        .map(|(di, dj)| abs_mod(ci * di + cj * dj))
        .collect()
}

fn offsets(radius: i64) -> impl Iterator<Item = (i64, i64)> {
    (-radius..=radius)
        .flat_map(move |di| (-radius..=radius).map(move |dj| (di, dj)))
        .filter(|&d| d != (0, 0))
}

fn modn(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

/// `|(a mod n) - (b mod n)|` equals `|a - b| mod n` or `n - (|a - b| mod n)`.
pub fn mod_abs_diff_fact(a: i64, b: i64, n: i64) -> bool {
    let lhs = (modn(a, n) - modn(b, n)).abs();
    let r = (a - b).abs() % n;
    lhs == r || lhs == n - r
}

/// `|(a mod n) - (b mod n)| >= p` iff `p <= |a - b| mod n <= n - p`.
pub fn corollary1_equiv(a: i64, b: i64, n: i64, p: i64) -> bool {
    let lhs = (modn(a, n) - modn(b, n)).abs() >= p;
    let r = (a - b).abs() % n;
    let rhs = p <= r && r <= n - p;
    lhs == rhs
}

/// The direction of [`corollary1_equiv`] that holds for all inputs:
/// `p <= |a - b| mod n <= n - p` implies `|(a mod n) - (b mod n)| >= p`.
pub fn corollary1_sufficient(a: i64, b: i64, n: i64, p: i64) -> bool {
    let r = (a - b).abs() % n;
    !(p <= r && r <= n - p) || (modn(a, n) - modn(b, n)).abs() >= p
}

/// `|a·n - b| mod n` equals `b mod n` or `n - (b mod n)`.
pub fn corollary2_fact(a: i64, b: i64, n: i64) -> bool {
    let lhs = (a * n - b).abs() % n;
    let r = modn(b, n);
    lhs == r || lhs == n - r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force reading of the shift condition: some `k` with
    /// `shift = (11k + (-1)^a·c·m) mod n`. Since `n` is a multiple of 11,
    /// `k` ranging over one period `[0, n)` covers every residue class.
    fn qualifies_by_enumeration(m: usize, n: usize, shift: usize, f: Formula) -> bool {
        let c = match f.family() {
            Family::F => 4,
            Family::G => 3,
        };
        let sign = if f.a() == 1 { -1 } else { 1 };
        let (m, n) = (m as i64, n as i64);
        (0..n).any(|k| (11 * k + sign * c * m).rem_euclid(n) == shift as i64)
    }

    #[test]
    fn residue_reduction_matches_enumeration() {
        for n in [11, 22, 33] {
            for m in 3..=20 {
                for shift in 0..n {
                    for f in Formula::ALL {
                        assert_eq!(
                            f.required_residue(m) == shift % 11,
                            qualifies_by_enumeration(m, n, shift, f),
                            "m={m} n={n} shift={shift} formula={f}"
                        );
                    }
                    let class = classify_shift(m, n, shift).unwrap();
                    let first = Formula::ALL
                        .into_iter()
                        .find(|&f| qualifies_by_enumeration(m, n, shift, f));
                    assert_eq!(class.formula, first);
                }
            }
        }
    }

    #[test]
    fn figure_shifts() {
        let cases = [
            (3, Some(Formula::F1)),
            (8, Some(Formula::F2)),
            (5, Some(Formula::G1)),
            (6, Some(Formula::G2)),
            (7, None),
        ];
        for (shift, expected) in cases {
            assert_eq!(classify_shift(13, 11, shift).unwrap().formula, expected);
        }
    }

    #[test]
    fn unqualified_without_multiple_of_eleven() {
        // 10 ≡ -4·3 (mod 11) but 12 is not a multiple of 11.
        let class = classify_shift(3, 12, 10).unwrap();
        assert_eq!(class.formula, None);
        assert_eq!(class.residue, 10);
        assert_eq!(
            classify_shift(3, 11, 10).unwrap().formula,
            Some(Formula::F1)
        );
    }

    #[test]
    fn tie_break_prefers_f1() {
        // m = 11 sends every required residue to 0.
        for f in Formula::ALL {
            assert_eq!(f.required_residue(11), 0);
        }
        assert_eq!(
            classify_shift(11, 22, 11).unwrap().formula,
            Some(Formula::F1)
        );
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert_eq!(classify_shift(2, 11, 0), Err(Error::CycleTooShort(2)));
        assert_eq!(
            classify_shift(3, 11, 11),
            Err(Error::ShiftOutOfRange { shift: 11, n: 11 })
        );
    }

    #[test]
    fn closed_form_values() {
        let f1 = FormulaParams::classified(13, 11, 3).unwrap();
        assert_eq!(closed_form_label(&f1, 0, 0), Ok(0));
        assert_eq!(closed_form_label(&f1, 2, 3), Ok(8));
        let g2 = FormulaParams::classified(13, 11, 6).unwrap();
        assert_eq!(g2.formula(), Formula::G2);
        assert_eq!(closed_form_label(&g2, 1, 1), Ok(8));
        assert!(matches!(
            closed_form_label(&f1, 13, 0),
            Err(Error::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn generated_rows() {
        let f1 = FormulaParams::classified(13, 11, 3).unwrap();
        let labels = generate_labeling(&f1);
        assert_eq!(labels.labels()[..11], [0, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6]);
        assert_eq!(labels.labels()[11..22], [2, 7, 1, 6, 0, 5, 10, 4, 9, 3, 8]);
    }

    #[test]
    fn labels_depend_on_coordinates_mod_eleven() {
        let p = FormulaParams::classified(25, 33, 2).unwrap();
        let labels = generate_labeling(&p);
        let n = p.n();
        for i in 0..p.m() {
            for j in 0..n {
                let l = labels.get(i * n + j);
                assert!(l <= 10);
                assert_eq!(l, p.formula().eval(i % 11, j % 11));
            }
        }
    }

    #[test]
    fn unqualified_params_fail() {
        assert_eq!(
            FormulaParams::classified(13, 11, 7),
            Err(Error::UnqualifiedShift {
                m: 13,
                n: 11,
                shift: 7
            })
        );
        let forced = FormulaParams::forced(13, 11, 0, Formula::F1).unwrap();
        assert!(forced.is_forced());
        assert!(!FormulaParams::forced(13, 11, 3, Formula::F1)
            .unwrap()
            .is_forced());
    }

    #[test]
    fn formula_names_roundtrip() {
        for f in Formula::ALL {
            assert_eq!(f.to_string().parse::<Formula>(), Ok(f));
        }
        assert!("h1".parse::<Formula>().is_err());
    }

    #[test]
    fn modular_fact_examples() {
        assert!(mod_abs_diff_fact(7, 3, 5));
        assert!(mod_abs_diff_fact(4, 4, 9));
        assert!(mod_abs_diff_fact(-1, 1, 11));

        assert!(corollary1_equiv(7, 3, 5, 1));
        assert!((modn(7, 5) - modn(3, 5)).abs() >= 1);
        assert!(corollary1_equiv(6, 1, 5, 2));
        assert!((modn(6, 5) - modn(1, 5)).abs() < 2);
        assert!(corollary1_equiv(0, 0, 7, 3));

        assert!(corollary2_fact(3, 4, 11));
        assert_eq!((3i64 * 11 - 4).abs() % 11, 7);
        assert!(corollary2_fact(5, 0, 8));
        assert!(corollary2_fact(1, 13, 11));
    }

    #[test]
    fn corollary1_converse_fails() {
        // |4 - 0| = 4 >= 2, yet |4 - 0| mod 5 = 4 > 5 - 2.
        assert!(!corollary1_equiv(4, 0, 5, 2));
        assert!(corollary1_sufficient(4, 0, 5, 2));
        assert!(!corollary1_equiv(-100, -99, 3, 2));
    }

    #[test]
    fn full_square_of_offsets_would_hit_seven() {
        // The inner ring (adjacent offsets) reaches 7 for f1, so the
        // distance-2 set must be restricted to the outer ring.
        assert!(adjacent_offset_residues(Formula::F1).contains(&7));
        assert!(!distance2_offset_residues(Formula::F1).contains(&7));
    }
}
