use std::fmt;

/// A subset of the ground set `1..=n`. Element `e` is stored in bit `e - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All of `1..=n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e >= 1);
        ElementSet(1 << (e - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Self::EMPTY, |acc, e| acc.with(e))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        (1..=32).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    #[inline]
    #[must_use]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1 << (e - 1)))
    }

    #[inline]
    #[must_use]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << (e - 1)))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order on sorted element lists: `{1,2} < {1,3} < {2,3}`, and a proper
    /// prefix sorts first.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// Image under `map`, where `map[e - 1]` is the image of `e`.
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().fold(Self::EMPTY, |acc, e| acc.with(map[e - 1]))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of `within`, in lexicographic order of their element lists.
pub fn subsets_of_size(within: ElementSet, k: usize) -> Vec<ElementSet> {
    let elems = within.to_vec();
    let mut out = Vec::new();
    if k > elems.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| elems[i]).collect());
        // rightmost index that can still advance
        let mut i = k;
        while i > 0 && idx[i - 1] == elems.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every subset of `within`, by increasing bit pattern.
pub fn all_subsets(within: ElementSet) -> impl Iterator<Item = ElementSet> {
    let mask = within.bits();
    let mut sub: u32 = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        sub = sub.wrapping_sub(mask) & mask;
        if sub == 0 {
            done = true;
        }
        Some(ElementSet(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_subsets_of_size() {
        let s = subsets_of_size(ElementSet::full(4), 2);
        let lists: Vec<Vec<usize>> = s.iter().map(|x| x.to_vec()).collect();
        assert_eq!(
            lists,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(subsets_of_size(ElementSet::full(3), 0), vec![ElementSet::EMPTY]);
        assert!(subsets_of_size(ElementSet::full(2), 3).is_empty());
        assert_eq!(subsets_of_size(ElementSet::full(5), 5).len(), 1);
        assert_eq!(subsets_of_size(ElementSet::full(10), 4).len(), 210);
    }

    #[test]
    fn all_subsets_enumerates_powerset() {
        let within = ElementSet::from_elements([2, 4, 5]);
        let subs: Vec<_> = all_subsets(within).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(within)));
        assert_eq!(all_subsets(ElementSet::EMPTY).count(), 1);
    }

    #[test]
    fn lex_order() {
        let a = ElementSet::from_elements([1, 3]);
        let b = ElementSet::from_elements([2]);
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(a.to_string(), "{1,3}");
    }
}
