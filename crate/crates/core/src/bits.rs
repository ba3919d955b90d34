//! Subsets of a ground set `0..n` packed into a `u64`.

/// A subset of the ground set, bit `i` set iff element `i` is present.
pub type Set = u64;

/// The full set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> Set {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(s: Set, i: usize) -> bool {
    s >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

#[inline]
pub fn len(s: Set) -> usize {
    s.count_ones() as usize
}

/// Smallest element, if any.
#[inline]
pub fn min(s: Set) -> Option<usize> {
    (s != 0).then(|| s.trailing_zeros() as usize)
}

/// Largest element, if any.
#[inline]
pub fn max(s: Set) -> Option<usize> {
    (s != 0).then(|| 63 - s.leading_zeros() as usize)
}

/// Elements in increasing order.
pub fn elements(s: Set) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

pub fn from_elements<I: IntoIterator<Item = usize>>(items: I) -> Set {
    items.into_iter().fold(0, |acc, i| acc | 1 << i)
}

/// All subsets of `s`, in increasing numeric order.
pub fn subsets(s: Set) -> impl Iterator<Item = Set> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == s { None } else { Some((cur.wrapping_sub(s)) & s) };
        Some(cur)
    })
}

/// Subsets of `s` with exactly `k` elements.
pub fn subsets_of_size(s: Set, k: usize) -> impl Iterator<Item = Set> {
    subsets(s).filter(move |&t| len(t) == k)
}

/// Compact label such as `0456`, or `{10,11}` when an element exceeds 9.
pub fn label(s: Set) -> String {
    let elems: Vec<usize> = elements(s).collect();
    if elems.iter().all(|&e| e < 10) {
        if elems.is_empty() {
            "∅".to_string()
        } else {
            elems.iter().map(|e| e.to_string()).collect()
        }
    } else {
        let inner: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Parse a compact label (`0456`) or a comma list (`10,11`).
pub fn parse_label(text: &str) -> Option<Set> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    if t.is_empty() || t == "∅" {
        return Some(0);
    }
    if t.contains(',') {
        t.split(',')
            .map(|p| p.trim().parse::<usize>().ok().filter(|&e| e < 64))
            .collect::<Option<Vec<_>>>()
            .map(from_elements)
    } else {
        t.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .map(from_elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets(0b1011).count(), 8);
        assert_eq!(subsets(0).count(), 1);
        assert_eq!(subsets_of_size(full(5), 2).count(), 10);
    }

    #[test]
    fn labels_round_trip() {
        let s = from_elements([0, 4, 5, 6]);
        assert_eq!(label(s), "0456");
        assert_eq!(parse_label("0456"), Some(s));
        assert_eq!(parse_label("10,11"), Some(from_elements([10, 11])));
        assert_eq!(max(s), Some(6));
        assert_eq!(min(s), Some(0));
    }
}
