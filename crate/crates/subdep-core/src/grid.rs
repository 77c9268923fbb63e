use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finite sorted set of probability levels containing 0 and 1.
///
/// This is the domain component of a subcopula: the range of a marginal
/// distribution function restricted to what the data (or model) attains.
#[derive(Debug, Clone, PartialEq)]
pub struct GridDomain<Q: Scalar> {
    levels: Vec<Q>,
}

impl<Q: Scalar> GridDomain<Q> {
    /// Builds a domain from levels, enforcing: length >= 2, strictly
    /// increasing, first level 0, last level 1.
    pub fn new(levels: Vec<Q>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::InvalidDomain(format!(
                "need at least 2 levels, got {}",
                levels.len()
            )));
        }
        if levels[0] != Q::zero() {
            return Err(Error::InvalidDomain(format!(
                "first level must be 0, got {}",
                levels[0]
            )));
        }
        if *levels.last().unwrap() != Q::one() {
            return Err(Error::InvalidDomain(format!(
                "last level must be 1, got {}",
                levels.last().unwrap()
            )));
        }
        for w in levels.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidDomain(format!(
                    "levels must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { levels })
    }

    /// The uniform grid `{0, 1/n, ..., 1}` with `n + 1` levels.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "uniform grid needs n >= 1");
        let levels = (0..=n).map(|i| Q::ratio(i as i64, n as i64)).collect();
        Self { levels }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Q] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &Q {
        &self.levels[i]
    }

    /// A domain is degenerate when it is exactly `{0, 1}`: the margin there
    /// carries no information and the three Fréchet restrictions coincide.
    pub fn is_degenerate(&self) -> bool {
        self.levels.len() == 2
    }

    /// Whether 1/2 is one of the levels (where `M - Pi` attains 1/4).
    pub fn contains_half(&self) -> bool {
        let half = Q::ratio(1, 2);
        self.levels.iter().any(|l| *l == half)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    #[test]
    fn accepts_valid_domain() {
        let d = GridDomain::<f64>::new(vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.contains_half());
        assert!(!d.is_degenerate());
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(GridDomain::<f64>::new(vec![0.0]).is_err());
        assert!(GridDomain::<f64>::new(vec![0.1, 1.0]).is_err());
        assert!(GridDomain::<f64>::new(vec![0.0, 0.9]).is_err());
        assert!(GridDomain::<f64>::new(vec![0.0, 0.5, 0.5, 1.0]).is_err());
        assert!(GridDomain::<f64>::new(vec![0.0, 0.7, 0.3, 1.0]).is_err());
    }

    #[test]
    fn uniform_grid_is_exact() {
        let d = GridDomain::<BigRational>::uniform(4);
        assert_eq!(d.len(), 5);
        assert_eq!(*d.level(2), BigRational::ratio(1, 2));
        assert!(!d.is_degenerate());
        let d2 = GridDomain::<BigRational>::uniform(1);
        assert!(d2.is_degenerate());
    }
}
