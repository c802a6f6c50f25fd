//! The append-the-curling-number recurrence.

use crate::curl::curl_scan;
use crate::{Error, Seq, Symbol};

/// Result of running the recurrence until the first appended 1 (or a cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    /// The extended sequence. Ends with the first appended 1 unless the cap
    /// was hit, in which case it is truncated after `cap` appended terms.
    pub final_seq: Seq,
    /// Number of terms before the first appended 1, counting the starting
    /// terms. When the cap was hit (no 1 appeared) this is the full length.
    pub pre_one_len: usize,
    /// Number of appended terms.
    pub steps: usize,
    pub hit_cap: bool,
}

/// One step of the recurrence: append `k(s)` to `s`.
pub fn extend_step(s: &Seq) -> Result<Seq, Error> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut out = s.clone();
    out.push(curl_scan(s.terms()).0);
    Ok(out)
}

pub(crate) enum ExtendOutcome {
    /// A 1 was appended; the value is the number of terms before it.
    PreOne(usize),
    /// `cap` terms were appended without a 1 appearing.
    CapHit,
}

/// Extend `buf` in place until the appended term is 1 or `cap` terms have
/// been appended. Pre-existing 1's in `buf` do not stop the extension.
pub(crate) fn extend_in_place(buf: &mut Vec<Symbol>, cap: usize) -> ExtendOutcome {
    debug_assert!(!buf.is_empty() && cap > 0);
    let mut appended = 0usize;
    loop {
        let k = curl_scan(buf).0;
        buf.push(k);
        appended += 1;
        if k == 1 {
            return ExtendOutcome::PreOne(buf.len() - 1);
        }
        if appended == cap {
            return ExtendOutcome::CapHit;
        }
    }
}

/// Repeatedly apply [`extend_step`] until the appended value is 1, or until
/// `cap` terms have been appended (`hit_cap` is then set). The stop
/// condition is the first *appended* 1; 1's already present in `s` are
/// ignored.
pub fn extend_until_one(s: &Seq, cap: usize) -> Result<ExtensionResult, Error> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let mut buf = s.terms().to_vec();
    match extend_in_place(&mut buf, cap) {
        ExtendOutcome::PreOne(pre_one_len) => {
            let steps = buf.len() - s.len();
            Ok(ExtensionResult { final_seq: Seq::new(buf), pre_one_len, steps, hit_cap: false })
        }
        ExtendOutcome::CapHit => {
            let pre_one_len = buf.len();
            Ok(ExtensionResult { final_seq: Seq::new(buf), pre_one_len, steps: cap, hit_cap: true })
        }
    }
}

/// The tail-compose construction: let `T` be the pre-1 extension of `s`;
/// start over from the concatenation `T s` and extend that until a 1.
/// Useful for turning a known record start into a lower bound at a much
/// larger length. Cap exhaustion in either phase is reported via `hit_cap`
/// on the returned result.
pub fn tail_compose(s: &Seq, cap: usize) -> Result<ExtensionResult, Error> {
    let first = extend_until_one(s, cap)?;
    if first.hit_cap {
        return Ok(first);
    }
    let tail = Seq::from(&first.final_seq[..first.pre_one_len]);
    extend_until_one(&tail.concat(s), cap)
}
