//! Delay-sequence enumeration in lexicographic order.

/// Every sequence of length `len` over `values` (sorted, deduplicated by the
/// caller), lexicographic.
pub fn all_sequences(len: usize, values: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, values: &[u32], current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for &v in values {
            current.push(v);
            rec(len, values, current, out);
            current.pop();
        }
    }
    rec(len, values, &mut current, &mut out);
    out
}

/// Anti-unimodal sequences (weakly decreasing, then weakly increasing) of
/// length `len` over `1..=max_value`, optionally only those containing a 1.
/// Lexicographic.
pub fn anti_unimodal_sequences(len: usize, max_value: u32, require_one: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(
        len: usize,
        max_value: u32,
        rising: bool,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let prev = current.last().copied();
        for v in 1..=max_value {
            let next_rising = match prev {
                None => false,
                Some(p) if rising => {
                    if v < p {
                        continue;
                    }
                    true
                }
                Some(p) => v > p,
            };
            current.push(v);
            rec(len, max_value, next_rising, current, out);
            current.pop();
        }
    }
    rec(len, max_value, false, &mut current, &mut out);
    if require_one {
        out.retain(|s| s.contains(&1));
    }
    out
}
