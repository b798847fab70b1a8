//! Deterministic enumeration of color tuples.
//!
//! Order: by length, then colexicographically (compare the last entry first).

/// Nondecreasing tuples (multisets) over `0..colors` of every length `0..=max_len`.
pub fn multisets(colors: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let mut level = Vec::new();
        extend_multisets(colors, len, 0, &mut Vec::with_capacity(len), &mut level);
        level.sort_by(|a, b| colex(a, b));
        out.extend(level);
    }
    out
}

/// All tuples over `0..colors` of every length `0..=max_len`.
pub fn tuples(colors: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level = vec![Vec::new()];
    for _ in 0..=max_len {
        let mut sorted = level.clone();
        sorted.sort_by(|a, b| colex(a, b));
        out.extend(sorted);
        level = level
            .iter()
            .flat_map(|t| {
                (0..colors).map(move |c| {
                    let mut next = t.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}

fn extend_multisets(colors: usize, len: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for c in start..colors {
        prefix.push(c);
        extend_multisets(colors, len, c, prefix, out);
        prefix.pop();
    }
}

fn colex(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}
