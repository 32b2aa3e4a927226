/// Iterator over all orderings of a list, in lexicographic order of the
/// original positions.
pub struct Permutations<T> {
    items: Vec<T>,
    idx: Vec<usize>,
    done: bool,
}

impl<T: Clone> Iterator for Permutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i].clone()).collect();
        self.done = !next_permutation(&mut self.idx);
        Some(out)
    }
}

/// Advances to the next permutation in lexicographic order; false when the
/// input was the last one. Repeated values give each distinct arrangement once.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_permutations<T: Clone>(items: &[T]) -> Permutations<T> {
    Permutations {
        items: items.to_vec(),
        idx: (0..items.len()).collect(),
        done: false,
    }
}
