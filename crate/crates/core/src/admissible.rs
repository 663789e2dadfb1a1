//! k-admissible F-sets, `adm^F(H, k)` and `ind(H, k)` with certificates.
//!
//! A set `C` with a partition `C = C_1 ⊔ .. ⊔ C_r` is k-admissible when
//! (1) every `H[C_i]` has an edge, (2) every edge of `H[C]` lies in some
//! `H[C_i]`, (3) `k <= Σ ν_F(H[C_i]) <= r + k - 1`, and (4) every
//! `F(H[C_i], ν_F(H[C_i]))` is the principal ideal `(x_{C_i})`. Its score
//! is `|C| - Σ ν_F(H[C_i])`.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::FieldChoice;
use crate::hypergraph::Hypergraph;
use crate::powers::{is_principal_full_support, nu_f, sqf_symbolic_power, PowerKind};
use crate::regularity::{regularity_with, Budget};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleCertificate {
    #[serde(rename = "C")]
    pub c: VertexSet,
    pub parts: Vec<VertexSet>,
    pub nu: Vec<usize>,
    pub kind: PowerKind,
    pub k: usize,
    pub score: usize,
}

impl AdmissibleCertificate {
    /// Tie-break order: higher score, then lex-smaller `C`, then fewer parts,
    /// then lex-smaller part list. `Less` means preferred.
    fn preference(&self, other: &Self) -> Ordering {
        other
            .score
            .cmp(&self.score)
            .then_with(|| self.c.cmp(&other.c))
            .then_with(|| self.parts.len().cmp(&other.parts.len()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

fn keep_best(best: &mut Option<AdmissibleCertificate>, cand: AdmissibleCertificate) {
    if best
        .as_ref()
        .is_none_or(|b| cand.preference(b) == Ordering::Less)
    {
        *best = Some(cand);
    }
}

/// Outcome of [`validate_certificate`]. Condition ids: 0 structure (indices,
/// partition, k range, lengths), 1–4 as in the definition, 5 declared
/// `ν` values or score disagree with a recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub violated: Option<u8>,
    pub detail: String,
}

impl CertificateCheck {
    fn ok() -> Self {
        CertificateCheck {
            valid: true,
            violated: None,
            detail: String::new(),
        }
    }

    fn fail(cond: u8, detail: impl Into<String>) -> Self {
        CertificateCheck {
            valid: false,
            violated: Some(cond),
            detail: detail.into(),
        }
    }
}

/// Re-checks every condition from scratch.
pub fn validate_certificate(
    cert: &AdmissibleCertificate,
    h: &Hypergraph,
) -> Result<CertificateCheck> {
    let kind = cert.kind;
    let nu_h = nu_f(h, kind);
    if !cert.c.is_subset(h.vertices()) {
        return Ok(CertificateCheck::fail(0, "C is not a set of vertices of H"));
    }
    if cert.k < 1 || cert.k > nu_h {
        return Ok(CertificateCheck::fail(
            0,
            format!("k = {} outside 1..={nu_h}", cert.k),
        ));
    }
    if cert.parts.is_empty() || cert.nu.len() != cert.parts.len() {
        return Ok(CertificateCheck::fail(
            0,
            "parts and nu must be nonempty and of equal length",
        ));
    }
    let mut seen = VertexSet::EMPTY;
    for &p in &cert.parts {
        if !p.is_disjoint(seen) {
            return Ok(CertificateCheck::fail(0, "parts overlap"));
        }
        seen = seen | p;
    }
    if seen != cert.c {
        return Ok(CertificateCheck::fail(0, "parts do not cover C exactly"));
    }
    // (1)
    if let Some(p) = cert
        .parts
        .iter()
        .find(|&&p| h.edges_within(p).next().is_none())
    {
        return Ok(CertificateCheck::fail(
            1,
            format!("part {p:?} induces no edge"),
        ));
    }
    // (2)
    if let Some(e) = h
        .edges_within(cert.c)
        .find(|e| !cert.parts.iter().any(|p| e.is_subset(*p)))
    {
        return Ok(CertificateCheck::fail(
            2,
            format!("edge {e:?} crosses parts"),
        ));
    }
    // (3)
    let nus: Vec<usize> = cert
        .parts
        .iter()
        .map(|&p| nu_f(&h.induced(p).0, kind))
        .collect();
    let total: usize = nus.iter().sum();
    let r = cert.parts.len();
    if total < cert.k || total > r + cert.k - 1 {
        return Ok(CertificateCheck::fail(
            3,
            format!("Σν = {total} outside [{}, {}]", cert.k, r + cert.k - 1),
        ));
    }
    // (4)
    for &p in &cert.parts {
        let sub = h.induced(p).0;
        if !is_principal_full_support(&sub, kind)? {
            return Ok(CertificateCheck::fail(
                4,
                format!("F(H[{p:?}], ν) is not (x_C_i)"),
            ));
        }
        if kind == PowerKind::SquarefreeSymbolic {
            assert_principal_only_at_beta(&sub)?;
        }
    }
    if nus != cert.nu {
        return Ok(CertificateCheck::fail(
            5,
            format!("declared ν {:?}, recomputed {nus:?}", cert.nu),
        ));
    }
    if cert.score != cert.c.len() - total {
        return Ok(CertificateCheck::fail(
            5,
            format!(
                "declared score {}, recomputed {}",
                cert.score,
                cert.c.len() - total
            ),
        ));
    }
    if kind == PowerKind::SquarefreeSymbolic {
        let alpha = h.induced(cert.c).0.independence_number();
        if alpha != cert.score {
            return Err(Error::Internal(format!(
                "score {} differs from α(H[C]) = {alpha}",
                cert.score
            )));
        }
    }
    Ok(CertificateCheck::ok())
}

/// Principality of `I(H)^{k}` with full support can only happen at `k = β(H)`.
fn assert_principal_only_at_beta(h: &Hypergraph) -> Result<()> {
    let beta = h.cover_number();
    let full = h.vertices();
    for k in 1..beta {
        let p = sqf_symbolic_power(h, k as i64);
        if p.gens() == [full] {
            return Err(Error::Internal(format!(
                "I(H)^{{{k}}} is (x_V) although β = {beta}"
            )));
        }
    }
    Ok(())
}

fn check_k(h: &Hypergraph, k: usize, kind: PowerKind) -> Result<usize> {
    let nu = nu_f(h, kind);
    if k < 1 || k > nu {
        return Err(Error::KOutOfRange {
            k: k as i64,
            max: nu,
        });
    }
    Ok(nu)
}

/// `adm^F(H, k)` and a certificate attaining it.
///
/// Parts are unions of connected components of `H[C]`: condition (2) keeps
/// each component inside one part, and a vertex isolated in `H[C]` would sit
/// in a part whose principal generator cannot involve it, so such `C` are
/// skipped outright.
pub fn adm_number(
    h: &Hypergraph,
    k: usize,
    kind: PowerKind,
) -> Result<(usize, AdmissibleCertificate)> {
    check_k(h, k, kind)?;
    // part mask -> Some(ν) when condition (4) holds
    let mut part_info: HashMap<u64, Option<usize>> = HashMap::new();
    let mut info = |p: VertexSet| -> Result<Option<usize>> {
        if let Some(&v) = part_info.get(&p.bits()) {
            return Ok(v);
        }
        let sub = h.induced(p).0;
        let v = if is_principal_full_support(&sub, kind)? {
            Some(nu_f(&sub, kind))
        } else {
            None
        };
        part_info.insert(p.bits(), v);
        Ok(v)
    };
    let covered_by_edges =
        |c: VertexSet| h.edges_within(c).fold(VertexSet::EMPTY, |a, e| a | e) == c;

    let mut best: Option<AdmissibleCertificate> = None;
    for c in h.vertices().subsets() {
        if c.is_empty() || !covered_by_edges(c) {
            continue;
        }
        // score <= |C| - k
        if let Some(b) = &best {
            if c.len() < b.score + k {
                continue;
            }
        }
        let comps = h.components_within(c);
        for groups in set_partitions(comps.len()) {
            let parts: Vec<VertexSet> = groups
                .iter()
                .map(|g| g.iter().fold(VertexSet::EMPTY, |a, &i| a | comps[i]))
                .collect();
            let mut nus = Vec::with_capacity(parts.len());
            for &p in &parts {
                match info(p)? {
                    Some(v) => nus.push(v),
                    None => break,
                }
            }
            if nus.len() != parts.len() {
                continue;
            }
            let total: usize = nus.iter().sum();
            if total < k || total > parts.len() + k - 1 {
                continue;
            }
            let (parts, nus) = sort_parts(parts, nus);
            keep_best(
                &mut best,
                AdmissibleCertificate {
                    c,
                    parts,
                    nu: nus,
                    kind,
                    k,
                    score: c.len() - total,
                },
            );
        }
    }
    let cert = best.ok_or_else(|| Error::Internal(format!("no {k}-admissible set found")))?;
    Ok((cert.score, cert))
}

fn sort_parts(parts: Vec<VertexSet>, nus: Vec<usize>) -> (Vec<VertexSet>, Vec<usize>) {
    let mut both: Vec<(VertexSet, usize)> = parts.into_iter().zip(nus).collect();
    both.sort();
    both.into_iter().unzip()
}

/// All set partitions of `0..m`, each as a list of blocks.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, m: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, m, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        go(i + 1, m, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, m, &mut Vec::new(), &mut out);
    out
}

/// `ind(H, k)`: the largest `α(H[C])` over k-admissible sets, by a route
/// separate from [`adm_number`]: parts are chosen from all vertex sets passing
/// the minimal-cover criterion, partitions of `C` are built as exact covers,
/// and the score is `α(H[C])` computed directly.
pub fn ind_number(h: &Hypergraph, k: usize) -> Result<(usize, AdmissibleCertificate)> {
    check_k(h, k, PowerKind::SquarefreeSymbolic)?;
    // Candidate parts: p with an edge, and every vertex of p in a minimum
    // minimal cover of H[p].
    let mut candidates: Vec<(VertexSet, usize)> = Vec::new();
    for p in h.vertices().subsets() {
        let sub = h.induced(p).0;
        if sub.edges().is_empty() {
            continue;
        }
        let covers = sub.minimal_vertex_covers();
        let beta = covers.iter().map(|c| c.len()).min().unwrap_or(0);
        let ok = sub
            .vertices()
            .iter()
            .all(|x| covers.iter().any(|c| c.contains(x) && c.len() == beta));
        if ok {
            candidates.push((p, beta));
        }
    }

    let mut best: Option<AdmissibleCertificate> = None;
    for c in h.vertices().subsets() {
        if c.is_empty() {
            continue;
        }
        let alpha = h.induced(c).0.independence_number();
        if best.as_ref().is_some_and(|b| alpha < b.score) {
            continue;
        }
        let usable: Vec<(VertexSet, usize)> = candidates
            .iter()
            .copied()
            .filter(|(p, _)| p.is_subset(c))
            .collect();
        let mut chosen = Vec::new();
        exact_covers(c, &usable, &mut chosen, &mut |parts: &[(
            VertexSet,
            usize,
        )]| {
            let r = parts.len();
            let total: usize = parts.iter().map(|p| p.1).sum();
            if total < k || total > r + k - 1 {
                return;
            }
            if h.edges_within(c)
                .any(|e| !parts.iter().any(|(p, _)| e.is_subset(*p)))
            {
                return;
            }
            let (ps, nus) = sort_parts(
                parts.iter().map(|p| p.0).collect(),
                parts.iter().map(|p| p.1).collect(),
            );
            keep_best(
                &mut best,
                AdmissibleCertificate {
                    c,
                    parts: ps,
                    nu: nus,
                    kind: PowerKind::SquarefreeSymbolic,
                    k,
                    score: alpha,
                },
            );
        });
    }
    let cert = best.ok_or_else(|| Error::Internal(format!("no {k}-admissible set found")))?;
    Ok((cert.score, cert))
}

fn exact_covers(
    rest: VertexSet,
    usable: &[(VertexSet, usize)],
    chosen: &mut Vec<(VertexSet, usize)>,
    emit: &mut dyn FnMut(&[(VertexSet, usize)]),
) {
    let Some(v) = rest.min() else {
        emit(chosen);
        return;
    };
    for &(p, b) in usable {
        if p.contains(v) && p.is_subset(rest) {
            chosen.push((p, b));
            exact_covers(rest - p, usable, chosen, emit);
            chosen.pop();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub kind: PowerKind,
    pub k: usize,
    pub reg: usize,
    pub adm: usize,
    /// `reg - (adm + k)`; the lower bound says this is never negative.
    pub slack: i64,
    pub certificate: AdmissibleCertificate,
}

/// Computes both sides of `reg F(H, k) >= adm^F(H, k) + k`.
pub fn lower_bound_check(
    h: &Hypergraph,
    k: usize,
    kind: PowerKind,
    field: FieldChoice,
    budget: &Budget,
) -> Result<LowerBoundReport> {
    let (adm, certificate) = adm_number(h, k, kind)?;
    let reg = regularity_with(&kind.power(h, k), field, budget)?;
    Ok(LowerBoundReport {
        kind,
        k,
        reg,
        adm,
        slack: reg as i64 - (adm + k) as i64,
        certificate,
    })
}
