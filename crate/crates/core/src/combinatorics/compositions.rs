/// All `(z_1..z_parts)` with `0 <= z_i <= bound` summing to `total`, in
/// lexicographic order. `parts = 0` yields the empty vector iff `total = 0`.
pub fn enumerate_bounded_compositions(total: u32, parts: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fill(total, parts, bound, &mut cur, &mut out);
    out
}

fn fill(rest: u32, parts: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == parts {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let left = (parts - cur.len() - 1) as u64;
    for z in 0..=bound.min(rest) {
        if u64::from(rest - z) > left * u64::from(bound) {
            continue;
        }
        cur.push(z);
        fill(rest - z, parts, bound, cur, out);
        cur.pop();
    }
}

/// All compositions of `total` into exactly `parts` positive parts.
pub fn compositions_positive(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if (total as usize) < parts {
        return Vec::new();
    }
    enumerate_bounded_compositions(total - parts as u32, parts, total)
        .into_iter()
        .map(|v| v.into_iter().map(|x| x + 1).collect())
        .collect()
}
