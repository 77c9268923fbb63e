//! Subcopula representation, axiom validation, and the Fréchet restrictions.
//!
//! A subcopula is a grounded, 2-increasing function with uniform margins on
//! a finite grid `D1 x D2` where each domain contains 0 and 1. Validation
//! reports every violated axiom with its grid location and deficit; in exact
//! (rational) mode the checks carry no tolerance at all.

use crate::error::{Error, Result};
use crate::grid::GridDomain;
use crate::scalar::Scalar;

/// The three copulas restricted to a grid: lower Fréchet bound `W`,
/// independence `Pi`, upper Fréchet bound `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    W,
    Pi,
    M,
}

/// A bivariate subcopula on a finite grid, stored row-major:
/// `values[i][j] = S(d1.level(i), d2.level(j))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subcopula<Q: Scalar> {
    d1: GridDomain<Q>,
    d2: GridDomain<Q>,
    values: Vec<Q>,
}

/// Which axiom family a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `S(u, 0) = 0 = S(0, v)`.
    Grounded,
    /// `S(u, 1) = u` and `S(1, v) = v`.
    Margin,
    /// Nonnegative volume on every adjacent grid rectangle.
    TwoIncreasing,
    /// `S >= W` pointwise.
    FrechetLower,
    /// `S <= M` pointwise.
    FrechetUpper,
}

impl Axiom {
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Grounded => "grounded",
            Axiom::Margin => "margin",
            Axiom::TwoIncreasing => "two_increasing",
            Axiom::FrechetLower => "frechet_lower",
            Axiom::FrechetUpper => "frechet_upper",
        }
    }
}

/// A single axiom violation. For `TwoIncreasing` the location is the
/// lower-left corner of the offending adjacent rectangle.
#[derive(Debug, Clone)]
pub struct Violation<Q: Scalar> {
    pub axiom: Axiom,
    pub i: usize,
    pub j: usize,
    pub u: Q,
    pub v: Q,
    /// How far past the constraint the value lies (always positive).
    pub deficit: Q,
}

/// Outcome of validating a subcopula: empty iff all axioms hold.
#[derive(Debug, Clone)]
pub struct ValidationReport<Q: Scalar> {
    pub violations: Vec<Violation<Q>>,
}

impl<Q: Scalar> ValidationReport<Q> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Converts an invalid report into an error carrying the first violation.
    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            let first = &self.violations[0];
            Err(Error::InvalidSubcopula {
                violations: self.violations.len(),
                first: format!(
                    "{} at ({}, {}) deficit {}",
                    first.axiom.name(),
                    first.u,
                    first.v,
                    first.deficit
                ),
            })
        }
    }
}

impl<Q: Scalar> Subcopula<Q> {
    /// Assembles a subcopula from row vectors. Only the shape is checked
    /// here (a mismatch is a structural error); axiom checks live in
    /// [`Subcopula::validate`].
    pub fn new(d1: GridDomain<Q>, d2: GridDomain<Q>, rows: Vec<Vec<Q>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.len() != d1.len() || rows.iter().any(|r| r.len() != cols) || cols != d2.len() {
            return Err(Error::DimensionMismatch {
                rows: rows.len(),
                cols,
                d1: d1.len(),
                d2: d2.len(),
            });
        }
        let values = rows.into_iter().flatten().collect();
        Ok(Self { d1, d2, values })
    }

    /// Builds by evaluating `f(u, v)` at every grid point.
    pub fn from_fn(d1: GridDomain<Q>, d2: GridDomain<Q>, mut f: impl FnMut(&Q, &Q) -> Q) -> Self {
        let mut values = Vec::with_capacity(d1.len() * d2.len());
        for u in d1.levels() {
            for v in d2.levels() {
                values.push(f(u, v));
            }
        }
        Self { d1, d2, values }
    }

    pub fn d1(&self) -> &GridDomain<Q> {
        &self.d1
    }

    pub fn d2(&self) -> &GridDomain<Q> {
        &self.d2
    }

    pub fn value(&self, i: usize, j: usize) -> &Q {
        &self.values[i * self.d2.len() + j]
    }

    /// Grid size as `(|D1|, |D2|)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.d1.len(), self.d2.len())
    }

    /// True when the measure normalizers vanish: either domain is `{0, 1}`,
    /// which forces `W_S = Pi_S = M_S` and pins mu at 0.
    pub fn is_degenerate(&self) -> bool {
        self.d1.is_degenerate() || self.d2.is_degenerate()
    }

    /// Swaps the two coordinates. An involution; mu is invariant under it.
    pub fn transpose(&self) -> Subcopula<Q> {
        let (m1, m2) = self.shape();
        let mut values = Vec::with_capacity(m1 * m2);
        for j in 0..m2 {
            for i in 0..m1 {
                values.push(self.value(i, j).clone());
            }
        }
        Subcopula {
            d1: self.d2.clone(),
            d2: self.d1.clone(),
            values,
        }
    }

    /// Checks all four axiom families with the mode's default tolerance
    /// (exact mode: none).
    pub fn validate(&self) -> ValidationReport<Q> {
        self.validate_with_tol(&Q::default_axiom_tol())
    }

    /// Checks all four axiom families; a constraint counts as violated when
    /// broken by more than `tol`.
    pub fn validate_with_tol(&self, tol: &Q) -> ValidationReport<Q> {
        let (m1, m2) = self.shape();
        let mut violations = Vec::new();
        let mut push = |axiom: Axiom, i: usize, j: usize, deficit: Q, s: &Self| {
            violations.push(Violation {
                axiom,
                i,
                j,
                u: s.d1.level(i).clone(),
                v: s.d2.level(j).clone(),
                deficit,
            });
        };

        // Grounded: first row and first column are 0.
        for j in 0..m2 {
            let val = self.value(0, j);
            if val.abs() > *tol {
                push(Axiom::Grounded, 0, j, val.abs(), self);
            }
        }
        for i in 1..m1 {
            let val = self.value(i, 0);
            if val.abs() > *tol {
                push(Axiom::Grounded, i, 0, val.abs(), self);
            }
        }

        // Margins: S(u, 1) = u along the last column, S(1, v) = v along the
        // last row. The corners are already covered above / by the column.
        for i in 1..m1 {
            let dev = (self.value(i, m2 - 1).clone() - self.d1.level(i).clone()).abs();
            if dev > *tol {
                push(Axiom::Margin, i, m2 - 1, dev, self);
            }
        }
        for j in 1..m2 - 1 {
            let dev = (self.value(m1 - 1, j).clone() - self.d2.level(j).clone()).abs();
            if dev > *tol {
                push(Axiom::Margin, m1 - 1, j, dev, self);
            }
        }

        // 2-increasing on adjacent rectangles; volumes are additive over
        // cells, so adjacent rectangles suffice.
        for i in 0..m1 - 1 {
            for j in 0..m2 - 1 {
                let vol = self.value(i + 1, j + 1).clone() + self.value(i, j).clone()
                    - self.value(i + 1, j).clone()
                    - self.value(i, j + 1).clone();
                if vol < tol.clone().neg() {
                    push(Axiom::TwoIncreasing, i, j, vol.neg(), self);
                }
            }
        }

        // Fréchet-Hoeffding envelope, pointwise.
        for i in 0..m1 {
            for j in 0..m2 {
                let u = self.d1.level(i);
                let v = self.d2.level(j);
                let val = self.value(i, j);
                let upper = u.clone().min_with(v.clone());
                if val.clone() - upper > *tol {
                    push(Axiom::FrechetUpper, i, j, val.clone() - u.clone().min_with(v.clone()), self);
                }
                let lower = (u.clone() + v.clone() - Q::one()).max_with(Q::zero());
                if lower.clone() - val.clone() > *tol {
                    push(Axiom::FrechetLower, i, j, lower - val.clone(), self);
                }
            }
        }

        ValidationReport { violations }
    }
}

/// Evaluates one of `W`, `Pi`, `M` at a grid point.
pub fn bound_value<Q: Scalar>(kind: Restriction, u: &Q, v: &Q) -> Q {
    match kind {
        Restriction::W => (u.clone() + v.clone() - Q::one()).max_with(Q::zero()),
        Restriction::Pi => u.clone() * v.clone(),
        Restriction::M => u.clone().min_with(v.clone()),
    }
}

/// The restriction `W_S`, `Pi_S`, or `M_S` of the named copula to the grid
/// `d1 x d2`. The result is always a valid subcopula.
pub fn restrict<Q: Scalar>(kind: Restriction, d1: &GridDomain<Q>, d2: &GridDomain<Q>) -> Subcopula<Q> {
    Subcopula::from_fn(d1.clone(), d2.clone(), |u, v| bound_value(kind, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    fn half_grid() -> GridDomain<BigRational> {
        GridDomain::new(vec![rat(0, 1), rat(1, 2), rat(1, 1)]).unwrap()
    }

    #[test]
    fn trivial_subcopula_is_valid() {
        let d: GridDomain<BigRational> = GridDomain::new(vec![rat(0, 1), rat(1, 1)]).unwrap();
        let s = Subcopula::new(
            d.clone(),
            d,
            vec![vec![rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]],
        )
        .unwrap();
        assert!(s.validate().is_valid());
        assert!(s.is_degenerate());
    }

    #[test]
    fn dimension_mismatch_is_structural() {
        let d = half_grid();
        let err = Subcopula::new(d.clone(), d, vec![vec![rat(0, 1); 3]; 2]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn restrictions_match_closed_values() {
        let d = half_grid();
        let m = restrict(Restriction::M, &d, &d);
        assert_eq!(*m.value(1, 1), rat(1, 2));
        let w = restrict(Restriction::W, &d, &d);
        assert_eq!(*w.value(1, 1), rat(0, 1));
        let pi = restrict(Restriction::Pi, &d, &d);
        assert_eq!(*pi.value(1, 1), rat(1, 4));
        for s in [m, w, pi] {
            assert!(s.validate().is_valid());
        }
    }

    #[test]
    fn restrict_pi_on_bernoulli_domains() {
        // theta1 = 0.3, theta2 = 0.6: interior level (0.7, 0.4) -> 0.28.
        let d1 = GridDomain::new(vec![rat(0, 1), rat(7, 10), rat(1, 1)]).unwrap();
        let d2 = GridDomain::new(vec![rat(0, 1), rat(2, 5), rat(1, 1)]).unwrap();
        let pi = restrict(Restriction::Pi, &d1, &d2);
        assert_eq!(*pi.value(1, 1), rat(28, 100));
    }

    #[test]
    fn detects_each_axiom_violation() {
        let d = half_grid();
        // Violates groundedness at (1, 0) and margins at (1, 2).
        let s = Subcopula::new(
            d.clone(),
            d.clone(),
            vec![
                vec![rat(0, 1), rat(0, 1), rat(0, 1)],
                vec![rat(1, 10), rat(1, 4), rat(2, 5)],
                vec![rat(0, 1), rat(1, 2), rat(1, 1)],
            ],
        )
        .unwrap();
        let report = s.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::Grounded && v.i == 1 && v.j == 0));
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::Margin && v.i == 1 && v.j == 2));

        // Interior value above M: Fréchet upper violation at (1, 1).
        let s = Subcopula::new(
            d.clone(),
            d.clone(),
            vec![
                vec![rat(0, 1), rat(0, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1), rat(1, 2)],
                vec![rat(0, 1), rat(1, 2), rat(1, 1)],
            ],
        )
        .unwrap();
        let report = s.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::FrechetUpper && v.i == 1 && v.j == 1));
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::TwoIncreasing));

        // Interior value below W on a domain where W is positive.
        let d9 = GridDomain::new(vec![rat(0, 1), rat(9, 10), rat(1, 1)]).unwrap();
        let s = Subcopula::new(
            d9.clone(),
            d9.clone(),
            vec![
                vec![rat(0, 1), rat(0, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 2), rat(9, 10)],
                vec![rat(0, 1), rat(9, 10), rat(1, 1)],
            ],
        )
        .unwrap();
        let report = s.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::FrechetLower && v.i == 1 && v.j == 1));
    }

    #[test]
    fn transpose_is_involution() {
        let d1 = GridDomain::new(vec![rat(0, 1), rat(1, 3), rat(1, 1)]).unwrap();
        let d2 = GridDomain::new(vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(1, 1)]).unwrap();
        let s = restrict(Restriction::M, &d1, &d2);
        let t = s.transpose();
        assert_eq!(t.shape(), (4, 3));
        assert_eq!(t.transpose(), s);
        assert!(t.validate().is_valid());
    }

    #[test]
    fn float_mode_uses_tolerance() {
        let d = GridDomain::<f64>::new(vec![0.0, 0.5, 1.0]).unwrap();
        let mut rows = vec![
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.25, 0.5],
            vec![0.0, 0.5, 1.0],
        ];
        rows[1][2] += 1e-14; // margin off by less than the 1e-12 default tolerance
        let s = Subcopula::new(d.clone(), d.clone(), rows).unwrap();
        assert!(s.validate().is_valid());
        let strict = s.validate_with_tol(&0.0);
        assert!(!strict.is_valid());
    }
}
