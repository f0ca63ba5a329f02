use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite, labeled point set. Points are the indices `0..size`.
///
/// Domains are compared by identity (`Arc::ptr_eq`): two permutations can be
/// composed only if they were built on the very same domain value.
pub struct Domain {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Set for the domain of 2-subsets of another domain.
    pair_base: Option<Arc<Domain>>,
}

impl Domain {
    pub fn new(labels: Vec<String>) -> Result<Arc<Domain>> {
        Self::build(labels, None)
    }

    /// Points labeled `"0"`, `"1"`, ...
    pub fn indexed(size: usize) -> Arc<Domain> {
        Self::build((0..size).map(|i| i.to_string()).collect(), None)
            .expect("numeric labels are distinct")
    }

    /// All 2-subsets `{i, j}`, `i < j`, of `base`, in lexicographic order.
    pub fn pairs(base: &Arc<Domain>) -> Arc<Domain> {
        let n = base.size();
        let mut labels = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                labels.push(format!("{{{},{}}}", base.labels[i], base.labels[j]));
            }
        }
        Self::build(labels, Some(Arc::clone(base))).expect("pairs of distinct labels are distinct")
    }

    fn build(labels: Vec<String>, pair_base: Option<Arc<Domain>>) -> Result<Arc<Domain>> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate point label {l:?}")));
            }
        }
        if labels.len() > u32::MAX as usize {
            return Err(Error::domain("domain too large"));
        }
        Ok(Arc::new(Domain {
            labels,
            index,
            pair_base,
        }))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The domain whose 2-subsets this domain enumerates, if any.
    pub fn pair_base(&self) -> Option<&Arc<Domain>> {
        self.pair_base.as_ref()
    }

    /// Index of `{a, b}` in a pair domain over a base of size `n`.
    pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        debug_assert!(i != j && j < n);
        i * n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Inverse of [`Domain::pair_index`] for this (pair) domain.
    pub fn pair_members(&self, k: usize) -> Option<(usize, usize)> {
        let n = self.pair_base.as_ref()?.size();
        if k >= self.size() {
            return None;
        }
        let mut i = 0;
        let mut start = 0;
        while start + (n - i - 1) <= k {
            start += n - i - 1;
            i += 1;
        }
        Some((i, i + 1 + (k - start)))
    }

    pub fn same(a: &Arc<Domain>, b: &Arc<Domain>) -> bool {
        Arc::ptr_eq(a, b)
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Domain")
            .field("size", &self.size())
            .field("pairs", &self.pair_base.is_some())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing_matches_enumeration() {
        let base = Domain::indexed(7);
        let pairs = Domain::pairs(&base);
        assert_eq!(pairs.size(), 21);
        for k in 0..pairs.size() {
            let (i, j) = pairs.pair_members(k).unwrap();
            assert!(i < j);
            assert_eq!(Domain::pair_index(7, i, j), k);
            assert_eq!(Domain::pair_index(7, j, i), k);
            assert_eq!(pairs.label(k), format!("{{{i},{j}}}"));
        }
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(Domain::new(vec!["a".into(), "a".into()]).is_err());
        let d = Domain::new(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(d.index_of("b"), Some(1));
        assert_eq!(d.index_of("c"), None);
    }
}
