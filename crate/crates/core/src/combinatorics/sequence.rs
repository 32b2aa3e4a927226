use crate::{Error, Result};

/// The sequence `a_1 = 0, a_2 = 1, a_n = c a_{n-1} - a_{n-2}`, extended to
/// every integer index by running the recurrence backwards
/// (`a_0 = -1`, `a_{-1} = -c`, ...).
#[derive(Clone, Debug)]
pub struct ASequence {
    c: i64,
    lo: i64,
    values: Vec<i64>,
}

impl ASequence {
    /// Precomputes `a_lo..=a_hi` with `lo = min(hi, 0) - 3`.
    pub fn new(c: i64, hi: i64) -> Result<Self> {
        let lo = hi.min(0) - 3;
        // a_lo, a_{lo+1} from the backwards recurrence a_{i-1} = c a_i - a_{i+1}.
        let (mut cur, mut next) = (0i64, 1i64); // a_1, a_2
        let mut i = 1;
        while i > lo {
            let prev = c
                .checked_mul(cur)
                .and_then(|v| v.checked_sub(next))
                .ok_or_else(|| Error::Overflow(format!("a_{} for c = {c}", i - 1)))?;
            next = cur;
            cur = prev;
            i -= 1;
        }
        let mut values = vec![cur, next];
        while (values.len() as i64) < hi - lo + 1 {
            let k = values.len();
            let v = c
                .checked_mul(values[k - 1])
                .and_then(|v| v.checked_sub(values[k - 2]))
                .ok_or_else(|| Error::Overflow(format!("a_{} for c = {c}", lo + k as i64)))?;
            values.push(v);
        }
        values.truncate((hi - lo + 1) as usize);
        Ok(ASequence { c, lo, values })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// `a_i`; panics outside the precomputed range.
    pub fn get(&self, i: i64) -> i64 {
        assert!(
            i >= self.lo && i < self.lo + self.values.len() as i64,
            "a_{i} outside precomputed range"
        );
        self.values[(i - self.lo) as usize]
    }
}

/// `a_n` for `n >= 1`, `c >= 2`.
pub fn a_seq(n: i64, c: i64) -> Result<i64> {
    if n < 1 || c < 2 {
        return Err(Error::PreconditionViolated(format!(
            "a_seq needs n >= 1 and c >= 2, got n = {n}, c = {c}"
        )));
    }
    Ok(ASequence::new(c, n)?.get(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(a_seq(1, 3).unwrap(), 0);
        assert_eq!(a_seq(2, 3).unwrap(), 1);
        assert_eq!(a_seq(5, 2).unwrap(), 4);
        assert_eq!(a_seq(4, 3).unwrap(), 8);
        assert!(a_seq(0, 3).is_err());
        assert!(a_seq(3, 1).is_err());
    }

    #[test]
    fn c2_is_n_minus_one() {
        let s = ASequence::new(2, 30).unwrap();
        for n in -2..=30 {
            assert_eq!(s.get(n), n - 1);
        }
    }

    #[test]
    fn backwards_extension() {
        let s = ASequence::new(4, 6).unwrap();
        assert_eq!(s.get(0), -1);
        assert_eq!(s.get(-1), -4);
        assert_eq!(s.get(6), 209);
    }

    #[test]
    fn overflow_reported() {
        assert!(matches!(ASequence::new(1000, 40), Err(Error::Overflow(_))));
    }
}
