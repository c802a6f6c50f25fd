//! Streaming generation of Gijswijt's sequence (A090822), the never-below-2
//! variant (A091787), and the splice check relating `{2,3}`-start extensions
//! back to Gijswijt's sequence.

use crate::engine::IncrementalCurler;
use crate::{extend_until_one, Error, Seq, Symbol};

/// Which recurrence drives the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Append `k(S)` — from seed 1 this is Gijswijt's sequence.
    K,
    /// Append `h(S) = max(k(S), 2)` — from seed 1 this is A091787.
    H,
}

impl Rule {
    fn apply(self, k: u32) -> Symbol {
        match self {
            Rule::K => k,
            Rule::H => k.max(2),
        }
    }
}

/// A single-owner streaming generator. Terms are produced on demand and all
/// produced terms (seed included) stay accessible. Indexing is 1-based
/// throughout, so "term 220" means `produced()[219]`.
pub struct Generator {
    curler: IncrementalCurler,
    rule: Rule,
}

impl Generator {
    pub fn new(rule: Rule, seed: &Seq) -> Result<Self, Error> {
        if seed.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut curler = IncrementalCurler::new();
        for &c in seed.terms() {
            curler.append(c);
        }
        Ok(Generator { curler, rule })
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// All terms produced so far, seed included.
    pub fn produced(&self) -> &[Symbol] {
        self.curler.seq()
    }

    pub fn len(&self) -> usize {
        self.curler.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the seed is nonempty
    }

    /// Compute, append and return the next term.
    pub fn step(&mut self) -> Symbol {
        let term = self.rule.apply(self.curler.k());
        self.curler.append(term);
        term
    }

    /// Produce terms until at least `count` exist.
    pub fn advance_to(&mut self, count: usize) {
        while self.curler.len() < count {
            self.step();
        }
    }
}

/// First `count` terms of the sequence generated from `seed` under `rule`.
/// A `count` shorter than the seed returns that prefix of the seed.
pub fn generate(rule: Rule, seed: &Seq, count: usize) -> Result<Seq, Error> {
    if seed.is_empty() {
        return Err(Error::EmptySequence);
    }
    if count <= seed.len() {
        return Ok(Seq::from(&seed[..count]));
    }
    let mut gen = Generator::new(rule, seed)?;
    gen.advance_to(count);
    Ok(Seq::from(&gen.produced()[..count]))
}

/// Where a target value first appears in a generated stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FirstOccurrence {
    pub target: Symbol,
    /// 1-based term number, or `None` when the target did not appear within
    /// the scanned range.
    pub index: Option<usize>,
}

impl FirstOccurrence {
    pub fn found(&self) -> bool {
        self.index.is_some()
    }
}

/// Scan the first `cap` generated terms (seed included) for `target`.
pub fn first_occurrence(
    rule: Rule,
    seed: &Seq,
    target: Symbol,
    cap: usize,
) -> Result<FirstOccurrence, Error> {
    if seed.is_empty() {
        return Err(Error::EmptySequence);
    }
    for (i, &c) in seed.terms().iter().enumerate().take(cap) {
        if c == target {
            return Ok(FirstOccurrence { target, index: Some(i + 1) });
        }
    }
    let mut gen = Generator::new(rule, seed)?;
    while gen.len() < cap {
        let c = gen.step();
        if c == target {
            return Ok(FirstOccurrence { target, index: Some(gen.len()) });
        }
    }
    Ok(FirstOccurrence { target, index: None })
}

/// Witness of a splice-check divergence: mathematically interesting data,
/// since no counterexample to the splice behavior is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceDivergence {
    pub start: Seq,
    /// 1-based offset after the pre-1 extension at which the streams differ.
    pub offset: usize,
    /// Term of the continued extension of `start` at that offset.
    pub continued: Symbol,
    /// Corresponding term of Gijswijt's sequence.
    pub gijswijt: Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceOutcome {
    pub matches: bool,
    pub divergence: Option<SpliceDivergence>,
}

/// Check that continuing the recurrence past the first appended 1 of the
/// extension of `s` reproduces Gijswijt's sequence for `extra` terms: the
/// comparison window starts at the appended 1 itself, which corresponds to
/// Gijswijt term 1.
pub fn splice_check(s: &Seq, extra: usize, cap: usize) -> Result<SpliceOutcome, Error> {
    let ext = extend_until_one(s, cap)?;
    if ext.hit_cap {
        return Err(Error::CapExhausted { cap });
    }
    let pre = Seq::from(&ext.final_seq[..ext.pre_one_len]);
    let mut continued = Generator::new(Rule::K, &pre)?;
    let gold = generate(Rule::K, &Seq::new(vec![1]), extra)?;
    for (i, &expect) in gold.terms().iter().enumerate() {
        let got = continued.step();
        if got != expect {
            return Ok(SpliceOutcome {
                matches: false,
                divergence: Some(SpliceDivergence {
                    start: s.clone(),
                    offset: i + 1,
                    continued: got,
                    gijswijt: expect,
                }),
            });
        }
    }
    Ok(SpliceOutcome { matches: true, divergence: None })
}
