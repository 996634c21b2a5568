use std::collections::BTreeMap;
use std::fmt;

/// Dimensions of the graded pieces of a graded vector space, keyed by
/// (even, cohomological) degree. Zero dimensions are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub r: u32,
    pub n: u32,
    dims: BTreeMap<u64, u64>,
}

impl GradedDims {
    pub fn new(r: u32, n: u32) -> Self {
        Self {
            r,
            n,
            dims: BTreeMap::new(),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(r: u32, n: u32, pairs: I) -> Self {
        let mut g = Self::new(r, n);
        for (d, m) in pairs {
            g.add(d, m);
        }
        g
    }

    pub fn add(&mut self, degree: u64, count: u64) {
        if count == 0 {
            return;
        }
        *self.dims.entry(degree).or_insert(0) += count;
    }

    pub fn get(&self, degree: u64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, dimension)` pairs in ascending degree.
    pub fn series(&self) -> Vec<(u64, u64)> {
        self.dims.iter().map(|(&d, &m)| (d, m)).collect()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn top_degree(&self) -> Option<u64> {
        self.dims.keys().next_back().copied()
    }

    /// Drops every degree above `max_degree`.
    pub fn truncated(&self, max_degree: u64) -> Self {
        Self {
            r: self.r,
            n: self.n,
            dims: self
                .dims
                .range(..=max_degree)
                .map(|(&d, &m)| (d, m))
                .collect(),
        }
    }

    /// Degrees at which the two dimension maps differ (metadata ignored).
    pub fn differing_degrees(&self, other: &GradedDims) -> Vec<u64> {
        let mut keys: Vec<u64> = self.dims.keys().chain(other.dims.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|&d| self.get(d) != other.get(d))
            .collect()
    }

    pub fn same_dims(&self, other: &GradedDims) -> bool {
        self.dims == other.dims
    }
}

impl fmt::Display for GradedDims {
    /// Poincaré-polynomial notation, e.g. `1 + t^2 + 2t^4 + t^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .dims
            .iter()
            .map(|(&d, &m)| match (d, m) {
                (0, m) => m.to_string(),
                (d, 1) => format!("t^{d}"),
                (d, m) => format!("{m}t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_differences() {
        let a = GradedDims::from_pairs(2, 2, [(0, 1), (2, 1), (4, 2), (6, 1)]);
        assert_eq!(a.to_string(), "1 + t^2 + 2t^4 + t^6");
        assert_eq!(a.total(), 5);
        assert_eq!(a.top_degree(), Some(6));
        let b = GradedDims::from_pairs(2, 2, [(0, 1), (2, 1), (4, 1), (8, 1)]);
        assert_eq!(a.differing_degrees(&b), vec![4, 6, 8]);
        assert!(a.same_dims(&a.truncated(6)));
        assert_eq!(a.truncated(3).total(), 2);
    }
}
