//! Torus knots: the braid on `s` strands, its rewriting into two simple
//! factors behind `δₛ`, destabilization, and the resulting petal diagram.

use serde::{Deserialize, Serialize};

use crate::braid::{braids_equal, cycle_braid, destabilize, simple_braid, BraidWord};
use crate::error::{Error, Result};
use crate::invariants::{alexander_from_braid, alexander_from_pd, gcd, torus_alexander, LaurentPolynomial};
use crate::perm::{Permutation, TorusFamily};
use crate::petal::{petal_from_pair, petal_to_pd, PetalPermutation};

/// Coprime `1 < r < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusPair {
    r: u32,
    s: u32,
}

impl TorusPair {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r < 2 || s < 2 {
            return Err(Error::InvalidTorusPair { r, s, reason: "both parameters must be at least 2" });
        }
        if gcd(r, s) != 1 {
            return Err(Error::NotCoprime { r, s });
        }
        if r > s {
            return Err(Error::InvalidTorusPair { r, s, reason: "expected r < s" });
        }
        if s as usize > crate::perm::MAX_DEGREE {
            return Err(Error::DegreeTooLarge(s as usize));
        }
        Ok(Self { r, s })
    }

    /// Accepts either order; `T(r,s)` and `T(s,r)` are the same knot.
    pub fn normalized(r: u32, s: u32) -> Result<Self> {
        Self::new(r.min(s), r.max(s))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `⌊s/r⌋`, the number of destabilizations.
    pub fn quotient(&self) -> u32 {
        self.s / self.r
    }

    /// `s - ⌊s/r⌋`.
    pub fn reduced_strands(&self) -> usize {
        (self.s - self.quotient()) as usize
    }

    /// `2s - 2⌊s/r⌋ + 1`.
    pub fn petal_bound(&self) -> u32 {
        2 * self.s - 2 * self.quotient() + 1
    }

    /// All coprime `1 < r < s ≤ smax`, sorted by `(s, r)`.
    pub fn sweep(smax: u32) -> Vec<(u32, u32)> {
        let mut pairs = Vec::new();
        for s in 3..=smax {
            for r in 2..s {
                if gcd(r, s) == 1 {
                    pairs.push((r, s));
                }
            }
        }
        pairs
    }
}

/// `br(π₁)·br(π₂)` on `s` strands: `r` strands pass over the other `s - r`.
pub fn torus_braid(pair: TorusPair) -> BraidWord {
    let f = TorusFamily::new(pair);
    let (a, b) = (simple_braid(&f.head_reversal), simple_braid(&f.shifted_reversal));
    a.product(&b).expect("same strand count")
}

/// `δₘ·br(π₀⁻¹)·br(π₀)` on `m = s - ⌊s/r⌋` strands.
pub fn reduced_torus_word(pair: TorusPair) -> BraidWord {
    let f = TorusFamily::new(pair);
    let m = pair.reduced_strands();
    BraidWord::product_all(
        m,
        [&cycle_braid(m).expect("m ≥ 1"), &simple_braid(&f.reduced.inverse()), &simple_braid(&f.reduced)],
    )
    .expect("same strand count")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub label: String,
    pub strands: usize,
    #[serde(with = "word_text")]
    pub word: BraidWord,
}

mod word_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::braid::BraidWord;

    pub fn serialize<S: Serializer>(w: &BraidWord, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(w)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BraidWord, D::Error> {
        // The strand count lives next to the word, so parse on the widest
        // group and narrow in `Stage::validate`.
        let text = String::deserialize(d)?;
        BraidWord::parse(crate::perm::MAX_DEGREE, &text).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    /// Two stages are the same braid.
    Equal,
    /// The later stage is conjugate to the earlier one.
    Conjugate,
    /// Markov destabilization removed the top strand.
    Destabilize,
    /// An inversion-set containment needed by the rewrite holds.
    Containment,
    /// The closures have the same Alexander polynomial.
    Alexander,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub from: String,
    pub to: String,
    pub kind: CertificateKind,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub alexander: LaurentPolynomial,
    /// `"petal"` when the petal diagram was used, `"braid"` otherwise.
    pub route: String,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub r: u32,
    pub s: u32,
    pub stages: Vec<Stage>,
    pub certificates: Vec<Certificate>,
    #[serde(rename = "petal")]
    pub final_petal: PetalPermutation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantSummary>,
}

impl PipelineTrace {
    pub fn pair(&self) -> TorusPair {
        TorusPair { r: self.r, s: self.s }
    }

    pub fn stage(&self, label: &str) -> Option<&Stage> {
        self.stages.iter().find(|st| st.label == label)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| !c.ok)
    }

    pub fn passed(&self) -> usize {
        self.certificates.iter().filter(|c| c.ok).count()
    }

    pub fn is_verified(&self) -> bool {
        self.certificates.iter().all(|c| c.ok) && self.invariants.as_ref().is_none_or(|i| i.matched)
    }

    /// Fixes the strand counts of stages read back from JSON.
    pub fn validate(mut self) -> Result<Self> {
        for st in &mut self.stages {
            st.word = BraidWord::new(st.strands, st.word.letters().to_vec())?;
        }
        TorusPair::new(self.r, self.s)?;
        Ok(self)
    }
}

fn product(strands: usize, parts: &[BraidWord]) -> BraidWord {
    BraidWord::product_all(strands, parts.iter()).expect("same strand count")
}

fn chain(parts: &[&Permutation]) -> Permutation {
    parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.compose_unchecked(p))
}

/// A containment `Inv(outer) ⊇ Inv(inner)` and the step it justifies.
struct Claim {
    outer: Permutation,
    inner: Permutation,
    step: usize,
}

/// Runs the whole pipeline and records every certificate, failed or not.
pub fn trace_pipeline(pair: TorusPair) -> Result<PipelineTrace> {
    let f = TorusFamily::new(pair);
    let s = pair.s() as usize;
    let br = simple_braid;

    let rev = &f.head_reversal;
    let shift = &f.shifted_reversal;
    let mul = &f.multiply;
    let mul_inv = &mul.inverse();
    let cyc = &f.cycle;
    let cyc_r = &cyc.power(pair.r() as i64);
    let tail = &f.tail_rank;
    let tail_inv = &tail.inverse();
    let head = &f.head_rank;
    let head_inv = &head.inverse();
    let delta = cycle_braid(s)?;

    let lines: Vec<Vec<BraidWord>> = vec![
        vec![delta.clone(), br(mul_inv), br(rev), br(shift), br(&chain(&[cyc, mul_inv])).inverse()],
        vec![delta.clone(), br(&chain(&[mul_inv, tail])), br(tail_inv), br(rev), br(shift), br(&chain(&[cyc, mul_inv])).inverse()],
        vec![delta.clone(), br(&chain(&[mul_inv, tail])), br(&chain(&[tail_inv, rev])), br(shift), br(&chain(&[cyc, mul_inv])).inverse()],
        vec![delta.clone(), br(&chain(&[mul_inv, tail])), br(&chain(&[rev, tail_inv])), br(shift), br(&chain(&[mul_inv, cyc_r])).inverse()],
        vec![delta.clone(), br(&chain(&[mul_inv, tail])), br(rev), br(tail_inv), br(shift), br(&chain(&[mul_inv, cyc_r])).inverse()],
        vec![delta.clone(), br(&chain(&[mul_inv, tail])), br(rev), br(&chain(&[tail_inv, shift])), br(&chain(&[mul_inv, cyc_r])).inverse()],
        vec![
            delta.clone(),
            br(&chain(&[mul_inv, tail])),
            br(&chain(&[rev, head])),
            br(head_inv),
            br(&chain(&[tail_inv, shift])),
            br(&chain(&[mul_inv, cyc_r])).inverse(),
        ],
        vec![
            delta.clone(),
            br(&chain(&[mul_inv, tail, rev, head])),
            br(head_inv),
            br(&chain(&[tail_inv, shift, &cyc_r.inverse(), mul])),
        ],
        vec![delta.clone(), br(&chain(&[mul_inv, tail, rev, head])), br(head_inv), br(&chain(&[&rev.inverse(), tail_inv, mul]))],
        vec![delta.clone(), br(&chain(&[mul_inv, tail, rev, head])), br(&chain(&[head_inv, &rev.inverse(), tail_inv, mul]))],
    ];

    // Step k joins stage k and stage k+1, with stage 0 the torus braid.
    let claims = [
        Claim { outer: chain(&[cyc, mul_inv]), inner: mul_inv.clone(), step: 0 },
        Claim { outer: mul_inv.clone(), inner: tail_inv.clone(), step: 1 },
        Claim { outer: chain(&[tail_inv, rev]), inner: rev.clone(), step: 2 },
        Claim { outer: chain(&[rev, tail_inv]), inner: tail_inv.clone(), step: 4 },
        Claim { outer: chain(&[tail_inv, shift]), inner: shift.clone(), step: 5 },
        Claim { outer: rev.clone(), inner: head_inv.clone(), step: 6 },
        Claim { outer: chain(&[mul_inv, tail, rev, head]), inner: chain(&[rev, head]), step: 7 },
        Claim { outer: chain(&[tail_inv, shift]), inner: chain(&[mul_inv, cyc_r]), step: 7 },
        Claim {
            outer: chain(&[head_inv, &rev.inverse(), tail_inv, mul]),
            inner: chain(&[&rev.inverse(), tail_inv, mul]),
            step: 9,
        },
    ];

    let mut stages = vec![Stage { label: "torus".into(), strands: s, word: torus_braid(pair) }];
    for (k, parts) in lines.iter().enumerate() {
        stages.push(Stage { label: format!("line{}", k + 1), strands: s, word: product(s, parts) });
    }

    let mut certificates = Vec::new();
    let mut certify = |from: &Stage, to: &Stage, kind: CertificateKind, ok: bool| {
        certificates.push(Certificate { from: from.label.clone(), to: to.label.clone(), kind, ok });
    };

    let conjugator = br(&chain(&[cyc, mul_inv]));
    let conjugated = stages[0].word.conjugate(&conjugator)?;
    certify(&stages[0], &stages[1], CertificateKind::Conjugate, braids_equal(&conjugated, &stages[1].word)?);
    let torus_alex = alexander_from_braid(&stages[0].word)?;
    let same_alexander = |w: &BraidWord| -> Result<bool> { Ok(alexander_from_braid(w)?.equal_up_to_units(&torus_alex)) };
    certify(&stages[0], &stages[1], CertificateKind::Alexander, same_alexander(&stages[1].word)?);
    for claim in claims.iter().filter(|c| c.step == 0) {
        certify(&stages[0], &stages[1], CertificateKind::Containment, claim.outer.contains_inversions(&claim.inner)?);
    }
    for step in 1..lines.len() {
        let (a, b) = (&stages[step], &stages[step + 1]);
        for claim in claims.iter().filter(|c| c.step == step) {
            certify(a, b, CertificateKind::Containment, claim.outer.contains_inversions(&claim.inner)?);
        }
        certify(a, b, CertificateKind::Equal, braids_equal(&a.word, &b.word)?);
    }

    for k in 1..=pair.quotient() as usize {
        let previous = stages.last().expect("nonempty");
        let (word, ok) = match destabilize(&previous.word, 1) {
            Ok(w) => (w, true),
            Err(_) => break,
        };
        let stage = Stage { label: format!("destabilize{k}"), strands: word.strands(), word };
        certify(previous, &stage, CertificateKind::Destabilize, ok);
        certify(previous, &stage, CertificateKind::Alexander, same_alexander(&stage.word)?);
        stages.push(stage);
    }
    let last = stages.last().expect("nonempty");
    let reduced = Stage { label: "reduced".into(), strands: pair.reduced_strands(), word: reduced_torus_word(pair) };
    let ok = last.strands == reduced.strands && braids_equal(&last.word, &reduced.word)?;
    if last.strands != reduced.strands {
        certify(last, &reduced, CertificateKind::Destabilize, false);
    }
    certify(last, &reduced, CertificateKind::Equal, ok);
    stages.push(reduced);

    Ok(PipelineTrace {
        r: pair.r(),
        s: pair.s(),
        stages,
        certificates,
        final_petal: torus_petal(pair)?,
        invariants: None,
    })
}

/// The pipeline, failing at the first certificate that does not hold.
pub fn transformation_chain(pair: TorusPair) -> Result<PipelineTrace> {
    let trace = trace_pipeline(pair)?;
    if let Some(bad) = trace.failures().next() {
        return Err(Error::Certificate {
            label: format!("{} -> {}", bad.from, bad.to),
            detail: format!("{:?} certificate failed", bad.kind),
        });
    }
    Ok(trace)
}

/// The destabilized braid on `s - ⌊s/r⌋` strands.
pub fn reduced_torus_braid(pair: TorusPair) -> Result<BraidWord> {
    let trace = transformation_chain(pair)?;
    let stage = trace.stages.iter().rev().find(|st| st.label.starts_with("destabilize"));
    match stage {
        Some(st) => Ok(st.word.clone()),
        None => Err(Error::Destabilize { strand: pair.s() as usize, reason: "no destabilization recorded".into() }),
    }
}

/// Petal permutation of length `2s - 2⌊s/r⌋ + 1` for `T(r,s)`.
pub fn torus_petal(pair: TorusPair) -> Result<PetalPermutation> {
    let f = TorusFamily::new(pair);
    petal_from_pair(&Permutation::identity(pair.reduced_strands())?, &f.reduced)
}

/// Compares the knot of `petal` with the torus knot. Petal diagrams of at
/// most `pd_limit` petals go through their planar diagram; longer ones are
/// checked through the destabilized braid.
pub fn certify_knot_type(pair: TorusPair, petal: &PetalPermutation, pd_limit: usize) -> Result<InvariantSummary> {
    let expected = torus_alexander(pair.r(), pair.s())?;
    let (computed, route) = if petal.len() <= pd_limit {
        (alexander_from_pd(&petal_to_pd(petal))?, "petal")
    } else {
        (alexander_from_braid(&reduced_torus_word(pair))?, "braid")
    };
    let matched = computed.equal_up_to_units(&expected);
    Ok(InvariantSummary { alexander: computed, route: route.into(), matched })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetalNumberStatus {
    pub r: u32,
    pub s: u32,
    pub upper_bound: u32,
    /// Known exactly when `r < s < 2r`.
    pub exact: Option<u32>,
}

pub fn petal_number_status(r: u32, s: u32) -> Result<PetalNumberStatus> {
    if r == s {
        return Err(Error::InvalidTorusPair { r, s, reason: "r and s must differ" });
    }
    let pair = TorusPair::normalized(r, s)?;
    let upper_bound = pair.petal_bound();
    let exact = (pair.s() < 2 * pair.r()).then_some(2 * pair.s() - 1);
    Ok(PetalNumberStatus { r: pair.r(), s: pair.s(), upper_bound, exact })
}
