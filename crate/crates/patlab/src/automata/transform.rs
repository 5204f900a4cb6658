use crate::error::{Error, Result};

/// A total map on the state set `{0, .., n-1}`, as induced by one input
/// symbol. Witness automata are defined by giving one transformation per
/// symbol, written in cycle or range-shift notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    image: Vec<usize>,
}

impl Transformation {
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::invalid("transformation on an empty state set"));
        }
        if let Some(&bad) = image.iter().find(|&&q| q >= n) {
            return Err(Error::invalid(format!(
                "transformation image {bad} out of range for {n} states"
            )));
        }
        Ok(Transformation { image })
    }

    /// The identity on `n` states.
    pub fn identity(n: usize) -> Self {
        Transformation {
            image: (0..n).collect(),
        }
    }

    /// The cycle `(states[0], states[1], .., states[k-1])`, fixing everything
    /// else. A cycle on zero or one states is the identity.
    pub fn cycle(n: usize, states: &[usize]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        for &q in states {
            if q >= n {
                return Err(Error::invalid(format!(
                    "cycle state {q} out of range for {n} states"
                )));
            }
        }
        for w in states.windows(2) {
            image[w[0]] = w[1];
        }
        if states.len() >= 2 {
            image[states[states.len() - 1]] = states[0];
        }
        Self::from_image(image)
    }

    /// The range shift sending `q` to `q+1` for `lo <= q <= hi`, identity
    /// elsewhere.
    pub fn shift_up(n: usize, lo: usize, hi: usize) -> Result<Self> {
        if lo > hi || hi + 1 >= n {
            return Err(Error::invalid(format!(
                "shift range {lo}..={hi} invalid for {n} states"
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        for q in lo..=hi {
            image[q] = q + 1;
        }
        Self::from_image(image)
    }

    /// The range shift sending `q` to `q-1` for `lo <= q <= hi`, identity
    /// elsewhere.
    pub fn shift_down(n: usize, lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi || hi >= n {
            return Err(Error::invalid(format!(
                "shift range {lo}..={hi} invalid for {n} states"
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        for q in lo..=hi {
            image[q] = q - 1;
        }
        Self::from_image(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, q: usize) -> usize {
        self.image[q]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        for &q in &self.image {
            if seen[q] {
                return false;
            }
            seen[q] = true;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        // (0,1,2) on 4 states fixes 3
        let t = Transformation::cycle(4, &[0, 1, 2]).unwrap();
        assert_eq!(t.image(), &[1, 2, 0, 3]);
        assert!(t.is_permutation());
        // a 1-cycle is the identity
        let t = Transformation::cycle(3, &[1]).unwrap();
        assert_eq!(t.image(), Transformation::identity(3).image());
    }

    #[test]
    fn range_shifts() {
        // (0..=2 q -> q+1) on 4 states
        let t = Transformation::shift_up(4, 0, 2).unwrap();
        assert_eq!(t.image(), &[1, 2, 3, 3]);
        assert!(!t.is_permutation());
        let t = Transformation::shift_down(4, 1, 3).unwrap();
        assert_eq!(t.image(), &[0, 0, 1, 2]);
    }

    #[test]
    fn validates_ranges() {
        assert!(Transformation::from_image(vec![0, 3]).is_err());
        assert!(Transformation::cycle(3, &[0, 5]).is_err());
        assert!(Transformation::shift_up(4, 0, 3).is_err());
    }
}
