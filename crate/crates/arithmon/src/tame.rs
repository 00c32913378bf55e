//! Strong-primariness index, omega invariant, and tame degrees.
//!
//! All three invariants live near the same question: how far can an element
//! sit from the factorizations that use a fixed atom?
//!
//! * The power index of a nonzero member x is the smallest n such that
//!   every sum of n non-units is divisible by x. For numerical monoids it
//!   is computed exactly: the members not divisible by x all lie below the
//!   Frobenius number plus x, and level sets of sums are iterated inside
//!   that window until they clear the bad set. For the vector families the
//!   computation is bounded: power witnesses n * w are searched first (the
//!   product may leave the box), then grid level sets decide the rest.
//! * omega(u) is the largest size of a multiset of atoms whose sum u
//!   divides, while u divides no proper sub-multiset sum. For numerical
//!   monoids the search is exact: removing one atom a from a minimal
//!   multiset forces sum - a - u below the Frobenius number, so sums are
//!   bounded by u + frobenius + max_gen. Minimality is decided by full
//!   subset-sum reachability, not one-step removal.
//! * t(u) is the tame degree: over multiples a of the atom u, the farthest
//!   any factorization of a sits from the nearest one containing u. Lower
//!   bounds come from a bounded scan of multiples; for numerical monoids
//!   the scan is paired with the upper bound rho_{omega(u)}.

use crate::cert::Certification;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::factorize::{factorizations, Factorization, SearchBudget};
use crate::monoid::{box_cells, box_index, box_strides, MonoidSpec, Numerical};

/// Per-element factorization cap inside tame-degree scans. Elements with
/// more factorizations are skipped deterministically; the reported value
/// stays a sound lower bound.
const TAME_ELEMENT_CAP: u64 = 512;

/// Outcome of a power-index computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MIndex {
    /// Certified value: every sum of n non-units is divisible, and level
    /// n - 1 provably contains an escaping sum.
    Exact(u64),
    /// Within the search box, all sums of n non-units are divisible, and
    /// every smaller level had an escaping witness. Not a certification.
    BoxEvidence { n: u64, box_edge: i64 },
    /// Every level up to `n_max` had an escaping witness.
    RefutedUpTo { n_max: u64, witnesses: Vec<LevelWitness> },
}

/// A sum of non-units escaping the principal ideal of the target element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelWitness {
    pub level: u64,
    pub parts: Vec<Element>,
    pub sum: Element,
}

/// Power index of the nonzero member `x`: smallest n with every sum of n
/// non-units divisible by x.
///
/// Numerical monoids and the rational tail are exact; the vector families
/// search levels 1..=`n_max` inside the box of edge `box_edge`.
pub fn m_index(spec: &MonoidSpec, x: &Element, n_max: u64, box_edge: i64) -> Result<MIndex> {
    if !spec.contains(x)? || x.is_zero() {
        return Err(Error::Input(format!("{} is not a nonzero member", x)));
    }
    match spec {
        MonoidSpec::Numerical(n) => Ok(MIndex::Exact(m_index_numerical(n, x.coords()?[0])?)),
        MonoidSpec::PuiseuxTail => {
            Ok(MIndex::Exact(crate::puiseux::m_index_closed(x.rational()?)?))
        }
        _ => m_index_boxed(spec, x, n_max, box_edge),
    }
}

fn m_index_numerical(n: &Numerical, x: i64) -> Result<u64> {
    let hi = n.frobenius().max(-1) + x;
    let bad: Vec<i64> = (0..=hi)
        .filter(|&s| n.is_member(s) && !n.is_member(s - x))
        .collect();
    debug_assert!(bad.contains(&0));
    let max_bad = bad.iter().copied().max().unwrap_or(0);
    if max_bad == 0 {
        return Ok(1);
    }
    let size = (max_bad + 1) as usize;
    let base: Vec<bool> = (0..size).map(|v| v > 0 && n.is_member(v as i64)).collect();
    let mut level = base.clone();
    let mut m = 1_u64;
    loop {
        let hit = bad.iter().any(|&b| b > 0 && level[b as usize]);
        if !hit {
            return Ok(m);
        }
        let mut next = vec![false; size];
        for (v, slot) in next.iter_mut().enumerate() {
            *slot = base
                .iter()
                .enumerate()
                .take(v + 1)
                .any(|(b, &is_base)| is_base && level[v - b]);
        }
        level = next;
        m += 1;
        if m > 100_000 {
            return Err(Error::Internal("power index iteration failed to terminate".into()));
        }
    }
}

fn m_index_boxed(spec: &MonoidSpec, x: &Element, n_max: u64, box_edge: i64) -> Result<MIndex> {
    if n_max == 0 {
        return Err(Error::Input("n_max must be at least 1".into()));
    }
    let dim = spec.dim().unwrap();
    let cells = box_cells(dim, box_edge);
    let strides = box_strides(dim, box_edge);
    let base: Vec<bool> = cells
        .iter()
        .map(|v| Ok(!v.iter().all(|&c| c == 0) && spec.contains_coords(v)?))
        .collect::<Result<_>>()?;
    let divisible: Vec<bool> = cells
        .iter()
        .map(|v| {
            let diff: Vec<i64> = v.iter().zip(x.coords()?).map(|(c, u)| c - u).collect();
            spec.contains_coords(&diff)
        })
        .collect::<Result<_>>()?;

    let mut level = base.clone();
    // parents[l] maps a cell of level l + 2 to the base cell split off
    let mut parents: Vec<Vec<u32>> = Vec::new();
    let mut witnesses: Vec<LevelWitness> = Vec::new();

    for n in 1..=n_max {
        let witness = power_witness(spec, &cells, &base, x, n)?
            .or_else(|| grid_witness(&cells, &strides, &level, &divisible, &parents, n));
        match witness {
            Some(w) => witnesses.push(w),
            None => return Ok(MIndex::BoxEvidence { n, box_edge }),
        }
        if n < n_max {
            let mut next = vec![false; cells.len()];
            let mut parent = vec![u32::MAX; cells.len()];
            for (vi, v) in cells.iter().enumerate() {
                for (bi, b) in cells.iter().enumerate() {
                    if !base[bi] || b.iter().zip(v).any(|(c, d)| c > d) {
                        continue;
                    }
                    let rest: Vec<i64> = v.iter().zip(b).map(|(d, c)| d - c).collect();
                    if level[box_index(&rest, &strides)] {
                        next[vi] = true;
                        parent[vi] = bi as u32;
                        break;
                    }
                }
            }
            level = next;
            parents.push(parent);
        }
    }
    Ok(MIndex::RefutedUpTo { n_max, witnesses })
}

/// Searches for a non-unit w in the box whose n-fold sum escapes the
/// principal ideal of x. The sum itself may leave the box.
fn power_witness(
    spec: &MonoidSpec,
    cells: &[Vec<i64>],
    base: &[bool],
    x: &Element,
    n: u64,
) -> Result<Option<LevelWitness>> {
    for (wi, w) in cells.iter().enumerate() {
        if !base[wi] {
            continue;
        }
        let sum: Vec<i64> = w.iter().map(|&c| c * n as i64).collect();
        let diff: Vec<i64> = sum.iter().zip(x.coords()?).map(|(c, u)| c - u).collect();
        if !spec.contains_coords(&diff)? {
            let part = Element::vec(w.clone())?;
            return Ok(Some(LevelWitness {
                level: n,
                parts: vec![part; n as usize],
                sum: Element::vec(sum)?,
            }));
        }
    }
    Ok(None)
}

fn grid_witness(
    cells: &[Vec<i64>],
    strides: &[usize],
    level: &[bool],
    divisible: &[bool],
    parents: &[Vec<u32>],
    n: u64,
) -> Option<LevelWitness> {
    let vi = (0..cells.len()).find(|&i| level[i] && !divisible[i])?;
    let mut parts = Vec::new();
    let mut cur = vi;
    for l in (1..n).rev() {
        let b = parents[(l - 1) as usize][cur] as usize;
        parts.push(Element::IntVec(cells[b].clone()));
        let rest: Vec<i64> =
            cells[cur].iter().zip(&cells[b]).map(|(d, c)| d - c).collect();
        cur = box_index(&rest, strides);
    }
    parts.push(Element::IntVec(cells[cur].clone()));
    parts.sort_unstable();
    Some(LevelWitness {
        level: n,
        parts,
        sum: Element::IntVec(cells[vi].clone()),
    })
}

/// Result of an omega computation: the largest size of a minimal divisible
/// atom multiset found, with the multiset that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaResult {
    pub value: u64,
    pub certification: Certification,
    pub witness: Option<Factorization>,
}

/// omega(u) over atom multisets. Exact for numerical monoids; a lower
/// bound over the box of edge `box_edge` for the vector families.
pub fn omega(
    spec: &MonoidSpec,
    u: &Element,
    box_edge: i64,
    budget: &SearchBudget,
) -> Result<OmegaResult> {
    if !spec.contains(u)? || u.is_zero() {
        return Err(Error::Input(format!("{} is not a nonzero member", u)));
    }
    match spec {
        MonoidSpec::Numerical(n) => omega_numerical(n, u, budget),
        MonoidSpec::PuiseuxTail => Err(Error::Unsupported(
            "omega needs atom enumeration; the puiseux module serves this family".into(),
        )),
        _ => omega_boxed(spec, u, box_edge, budget),
    }
}

fn omega_numerical(n: &Numerical, u: &Element, budget: &SearchBudget) -> Result<OmegaResult> {
    let uv = u.coords()?[0];
    // removing one atom a from a minimal multiset leaves a sum not
    // divisible by u, so sum - a - u <= frobenius
    let bound = uv + n.frobenius() + n.max_gen();
    let mut gens_desc = n.gens().to_vec();
    gens_desc.reverse();

    let mut best: u64 = 0;
    let mut witness: Option<Factorization> = None;
    let mut visited: u64 = 0;
    let mut counts: Vec<(i64, u64)> = Vec::new();

    fn visit(
        n: &Numerical,
        uv: i64,
        counts: &[(i64, u64)],
        sigma: i64,
        best: &mut u64,
        witness: &mut Option<Factorization>,
    ) {
        if !n.is_member(sigma - uv) {
            return;
        }
        let len: u64 = counts.iter().map(|&(_, k)| k).sum();
        if len <= *best {
            return;
        }
        if minimal_numerical(n, uv, counts, sigma) {
            *best = len;
            *witness = Some(Factorization::from_pairs(
                counts.iter().map(|&(g, k)| (Element::IntVec(vec![g]), k)),
            ));
        }
    }

    fn dfs(
        n: &Numerical,
        gens_desc: &[i64],
        idx: usize,
        sigma: i64,
        bound: i64,
        uv: i64,
        counts: &mut Vec<(i64, u64)>,
        best: &mut u64,
        witness: &mut Option<Factorization>,
        visited: &mut u64,
        cap: u64,
    ) -> Result<()> {
        if idx == gens_desc.len() {
            return Ok(());
        }
        let g = gens_desc[idx];
        let k_max = (bound - sigma) / g;
        for k in (0..=k_max).rev() {
            if k > 0 {
                counts.push((g, k as u64));
            }
            let s2 = sigma + k * g;
            if k > 0 {
                *visited += 1;
                if *visited > cap {
                    return Err(Error::BudgetExceeded { partial: *visited - 1 });
                }
                visit(n, uv, counts, s2, best, witness);
            }
            let r = dfs(n, gens_desc, idx + 1, s2, bound, uv, counts, best, witness, visited, cap);
            if k > 0 {
                counts.pop();
            }
            r?;
        }
        Ok(())
    }

    dfs(
        n,
        &gens_desc,
        0,
        0,
        bound,
        uv,
        &mut counts,
        &mut best,
        &mut witness,
        &mut visited,
        budget.max_factorizations,
    )?;
    if best == 0 {
        return Err(Error::Internal(format!("no minimal multiset found for {}", u)));
    }
    Ok(OmegaResult { value: best, certification: Certification::Exact, witness })
}

/// Minimality over a scalar multiset: no proper nonzero subset sum s has
/// s - u in the monoid. Subset sums come from bitset reachability.
fn minimal_numerical(n: &Numerical, uv: i64, counts: &[(i64, u64)], sigma: i64) -> bool {
    let words = (sigma as usize) / 64 + 1;
    let mut bits = vec![0_u64; words];
    bits[0] = 1;
    for &(g, k) in counts {
        for _ in 0..k {
            shl_or(&mut bits, g as usize);
        }
    }
    for s in 1..sigma {
        let set = bits[(s as usize) / 64] >> ((s as usize) % 64) & 1 == 1;
        if set && n.is_member(s - uv) {
            return false;
        }
    }
    true
}

/// bits |= bits << by
fn shl_or(bits: &mut [u64], by: usize) {
    let (wshift, bshift) = (by / 64, by % 64);
    for i in (0..bits.len()).rev() {
        if i < wshift {
            break;
        }
        let mut val = bits[i - wshift] << bshift;
        if bshift > 0 && i > wshift {
            val |= bits[i - wshift - 1] >> (64 - bshift);
        }
        bits[i] |= val;
    }
}

fn omega_boxed(
    spec: &MonoidSpec,
    u: &Element,
    box_edge: i64,
    budget: &SearchBudget,
) -> Result<OmegaResult> {
    let atoms = spec.atoms_up_to(box_edge)?;
    let mut atoms_desc = atoms;
    atoms_desc.sort_unstable();
    atoms_desc.reverse();
    let dim = spec.dim().unwrap();
    let edge_vec = vec![box_edge; dim];

    let mut best: u64 = 0;
    let mut witness: Option<Factorization> = None;
    let mut visited: u64 = 0;
    let mut counts: Vec<(usize, u64)> = Vec::new();

    fn dfs(
        spec: &MonoidSpec,
        atoms_desc: &[Element],
        idx: usize,
        sigma: &mut Vec<i64>,
        edge: &[i64],
        u: &Element,
        counts: &mut Vec<(usize, u64)>,
        best: &mut u64,
        witness: &mut Option<Factorization>,
        visited: &mut u64,
        cap: u64,
    ) -> Result<()> {
        if idx == atoms_desc.len() {
            return Ok(());
        }
        let a = atoms_desc[idx].coords()?;
        let k_max = sigma
            .iter()
            .zip(a)
            .zip(edge)
            .filter(|((_, &ac), _)| ac > 0)
            .map(|((&sc, &ac), &ec)| (ec - sc) / ac)
            .min()
            .unwrap_or(0);
        for k in (0..=k_max).rev() {
            if k > 0 {
                counts.push((idx, k as u64));
                for (s, &ac) in sigma.iter_mut().zip(a) {
                    *s += k * ac;
                }
                *visited += 1;
                if *visited > cap {
                    return Err(Error::BudgetExceeded { partial: *visited - 1 });
                }
                let diff: Vec<i64> =
                    sigma.iter().zip(u.coords()?).map(|(s, c)| s - c).collect();
                if spec.contains_coords(&diff)? {
                    let len: u64 = counts.iter().map(|&(_, m)| m).sum();
                    if len > *best && minimal_boxed(spec, atoms_desc, counts, sigma, u)? {
                        *best = len;
                        *witness = Some(Factorization::from_pairs(
                            counts.iter().map(|&(i, m)| (atoms_desc[i].clone(), m)),
                        ));
                    }
                }
            }
            let r = dfs(
                spec, atoms_desc, idx + 1, sigma, edge, u, counts, best, witness, visited, cap,
            );
            if k > 0 {
                counts.pop();
                for (s, &ac) in sigma.iter_mut().zip(a) {
                    *s -= k * ac;
                }
            }
            r?;
        }
        Ok(())
    }

    let mut sigma = vec![0_i64; dim];
    dfs(
        spec,
        &atoms_desc,
        0,
        &mut sigma,
        &edge_vec,
        u,
        &mut counts,
        &mut best,
        &mut witness,
        &mut visited,
        budget.max_factorizations,
    )?;
    Ok(OmegaResult { value: best, certification: Certification::LowerBound, witness })
}

/// Minimality over a vector multiset via grid subset-sum reachability.
fn minimal_boxed(
    spec: &MonoidSpec,
    atoms_desc: &[Element],
    counts: &[(usize, u64)],
    sigma: &[i64],
    u: &Element,
) -> Result<bool> {
    let dim = sigma.len();
    let edge = sigma.iter().copied().max().unwrap_or(0);
    let cells = box_cells(dim, edge);
    let strides = box_strides(dim, edge);
    let inside =
        |v: &[i64]| v.iter().zip(sigma).all(|(c, s)| c <= s);
    let mut reach = vec![false; cells.len()];
    reach[0] = true;
    for &(i, k) in counts {
        let a = atoms_desc[i].coords()?;
        for _ in 0..k {
            let mut next = reach.clone();
            for (vi, v) in cells.iter().enumerate() {
                if next[vi] || !inside(v) {
                    continue;
                }
                if v.iter().zip(a).all(|(c, ac)| c >= *ac) {
                    let prev: Vec<i64> = v.iter().zip(a).map(|(c, ac)| c - ac).collect();
                    if reach[box_index(&prev, &strides)] {
                        next[vi] = true;
                    }
                }
            }
            reach = next;
        }
    }
    for (vi, v) in cells.iter().enumerate() {
        if !reach[vi] || v.iter().all(|&c| c == 0) || v == sigma {
            continue;
        }
        let diff: Vec<i64> = v.iter().zip(u.coords()?).map(|(c, uc)| c - uc).collect();
        if spec.contains_coords(&diff)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tame-degree estimate for an atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameDegreeEstimate {
    pub lower: u64,
    /// `None` means no finite upper bound was certified.
    pub upper: Option<u64>,
    pub exact: bool,
    pub bound_used: i64,
}

/// Tame degree of the atom `u`: lower bound from a scan of multiples
/// u + s for s in the box (or interval) of edge `radius`, upper bound from
/// rho_{omega(u)} when omega is exact.
pub fn tame_degree(
    spec: &MonoidSpec,
    u: &Element,
    radius: i64,
    budget: &SearchBudget,
) -> Result<TameDegreeEstimate> {
    if let MonoidSpec::PuiseuxTail = spec {
        return Err(Error::Unsupported(
            "tame degrees need factorization enumeration; the puiseux module serves this family"
                .into(),
        ));
    }
    if !spec.is_atom(u)? {
        return Err(Error::Input(format!("{} is not an atom", u)));
    }
    let om = omega(spec, u, radius, budget)?;
    if om.certification == Certification::Exact && om.value == 1 {
        // a prime atom: every factorization of each multiple contains it
        return Ok(TameDegreeEstimate { lower: 0, upper: Some(0), exact: true, bound_used: radius });
    }

    let element_budget = SearchBudget {
        max_elements: budget.max_elements,
        max_factorizations: budget.max_factorizations.min(TAME_ELEMENT_CAP),
    };
    let mut lower: u64 = 0;
    let mut skipped = false;

    let dim = spec.dim().unwrap();
    let shifts: Vec<Vec<i64>> = match spec {
        MonoidSpec::Numerical(n) => (0..=radius)
            .filter(|&s| n.is_member(s))
            .map(|s| vec![s])
            .collect(),
        _ => {
            let mut out = Vec::new();
            for v in box_cells(dim, radius) {
                if spec.contains_coords(&v)? {
                    out.push(v);
                }
            }
            out
        }
    };
    for s in shifts {
        let a = u.add(&Element::vec(s)?)?;
        let z = match factorizations(spec, &a, &element_budget) {
            Ok(z) => z,
            Err(Error::BudgetExceeded { .. }) => {
                skipped = true;
                continue;
            }
            Err(e) => return Err(e),
        };
        let with_u: Vec<&Factorization> = z.iter().filter(|f| f.contains(u)).collect();
        if with_u.is_empty() {
            return Err(Error::Internal(format!(
                "{} divides {} but no factorization contains it",
                u, a
            )));
        }
        for f in &z {
            if f.contains(u) {
                continue;
            }
            let near = with_u.iter().map(|g| f.distance(g)).min().unwrap();
            lower = lower.max(near);
        }
    }

    let upper = match spec {
        MonoidSpec::Numerical(_) if om.certification == Certification::Exact => {
            let (rho, cert) = crate::invariants::rho_k(spec, om.value, budget)?;
            (cert == Certification::Exact).then_some(rho)
        }
        _ => None,
    };
    let exact = !skipped && upper == Some(lower);
    Ok(TameDegreeEstimate { lower, upper, exact, bound_used: radius })
}

/// Verdict of a strong-primariness probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimaryStatus {
    /// Every member has a finite power index, with exact indices computed
    /// for the sampled elements.
    Certified,
    /// Some sampled element had an escaping witness at every level probed.
    RefutedAtBound,
    /// Bounded probes found no refutation but certify nothing.
    Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongPrimaryReport {
    pub status: PrimaryStatus,
    pub samples: Vec<(Element, MIndex)>,
    pub note: String,
}

/// Probes strong primariness: power indices for a deterministic sample of
/// atoms, levels up to `n_max`, boxes of edge `box_edge`.
pub fn strong_primary_report(
    spec: &MonoidSpec,
    n_max: u64,
    box_edge: i64,
) -> Result<StrongPrimaryReport> {
    match spec {
        MonoidSpec::Numerical(n) => {
            let mut samples = Vec::new();
            for &g in n.gens().iter().take(4) {
                let e = Element::vec(vec![g])?;
                let m = m_index(spec, &e, n_max, box_edge)?;
                samples.push((e, m));
            }
            Ok(StrongPrimaryReport {
                status: PrimaryStatus::Certified,
                samples,
                note: "every member above the Frobenius number plus x is divisible by x, so \
                       each power index is finite; sampled indices are exact"
                    .into(),
            })
        }
        MonoidSpec::PuiseuxTail => {
            let mut samples = Vec::new();
            for (p, q) in [(1, 1), (3, 2), (7, 4)] {
                let e = Element::rat(p, q)?;
                let m = m_index(spec, &e, n_max, box_edge)?;
                samples.push((e, m));
            }
            Ok(StrongPrimaryReport {
                status: PrimaryStatus::Certified,
                samples,
                note: "sums of n non-units are exactly the members at least n, so the power \
                       index of q is the ceiling of q plus one"
                    .into(),
            })
        }
        _ => {
            let atoms = spec.atoms_up_to(box_edge.min(3))?;
            let mut samples = Vec::new();
            let mut refuted = false;
            for u in atoms.into_iter().take(3) {
                let m = m_index(spec, &u, n_max, box_edge)?;
                if matches!(&m, MIndex::RefutedUpTo { .. }) {
                    refuted = true;
                }
                samples.push((u, m));
            }
            let status = if refuted { PrimaryStatus::RefutedAtBound } else { PrimaryStatus::Evidence };
            let note = match status {
                PrimaryStatus::RefutedAtBound => {
                    "a sampled element had an escaping sum of non-units at every probed level"
                        .into()
                }
                _ => "no refutation within the probed box; nothing is certified".into(),
            };
            Ok(StrongPrimaryReport { status, samples, note })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerical(gens: &[i64]) -> MonoidSpec {
        MonoidSpec::Numerical(Numerical::new(gens).unwrap())
    }

    fn scalar(n: i64) -> Element {
        Element::scalar(n).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn power_index_two_three() {
        let s = numerical(&[2, 3]);
        assert_eq!(m_index(&s, &scalar(2), 8, 10).unwrap(), MIndex::Exact(2));
        assert_eq!(m_index(&s, &scalar(3), 8, 10).unwrap(), MIndex::Exact(3));
        assert_eq!(m_index(&s, &scalar(6), 8, 10).unwrap(), MIndex::Exact(4));
    }

    #[test]
    fn power_index_rejects_non_members() {
        let s = numerical(&[2, 3]);
        assert!(m_index(&s, &scalar(1), 8, 10).is_err());
        assert!(m_index(&s, &scalar(0), 8, 10).is_err());
    }

    #[test]
    fn power_index_puiseux_closed_form() {
        let s = MonoidSpec::PuiseuxTail;
        let q = Element::rat(3, 2).unwrap();
        assert_eq!(m_index(&s, &q, 8, 10).unwrap(), MIndex::Exact(3));
    }

    #[test]
    fn sqrt_cone_power_index_is_refuted_with_witnesses() {
        let s = MonoidSpec::sqrt_cone(2).unwrap();
        for coords in [vec![1, 0], vec![1, 1]] {
            let x = Element::vec(coords).unwrap();
            match m_index(&s, &x, 8, 10).unwrap() {
                MIndex::RefutedUpTo { n_max, witnesses } => {
                    assert_eq!(n_max, 8);
                    let levels: Vec<u64> = witnesses.iter().map(|w| w.level).collect();
                    assert_eq!(levels, (1..=8).collect::<Vec<_>>());
                    for w in &witnesses {
                        assert_eq!(w.parts.len() as u64, w.level);
                        let mut sum = Element::vec(vec![0, 0]).unwrap();
                        for p in &w.parts {
                            assert!(s.contains(p).unwrap() && !p.is_zero());
                            sum = sum.add(p).unwrap();
                        }
                        assert_eq!(sum, w.sum);
                        let diff: Vec<i64> = w
                            .sum
                            .coords()
                            .unwrap()
                            .iter()
                            .zip(x.coords().unwrap())
                            .map(|(a, b)| a - b)
                            .collect();
                        assert!(!s.contains_coords(&diff).unwrap());
                    }
                }
                other => panic!("expected refutation, got {:?}", other),
            }
        }
    }

    #[test]
    fn diagonal_wall_power_index_is_refuted() {
        let s = MonoidSpec::DiagonalWall;
        let x = Element::vec(vec![1, 0, 0]).unwrap();
        assert!(matches!(
            m_index(&s, &x, 8, 6).unwrap(),
            MIndex::RefutedUpTo { n_max: 8, .. }
        ));
    }

    #[test]
    fn single_generator_vec_monoid_gets_box_evidence() {
        let s = crate::families::make("fingen-vec: [[2]]").unwrap();
        let x = Element::vec(vec![2]).unwrap();
        assert_eq!(m_index(&s, &x, 8, 10).unwrap(), MIndex::BoxEvidence { n: 1, box_edge: 10 });
    }

    #[test]
    fn omega_two_three() {
        let s = numerical(&[2, 3]);
        let om = omega(&s, &scalar(2), 8, &budget()).unwrap();
        assert_eq!(om.value, 2);
        assert_eq!(om.certification, Certification::Exact);
        let w = om.witness.unwrap();
        assert_eq!(w.length(), 2);
        assert_eq!(w.multiplicity(&scalar(3)), 2);

        let om = omega(&s, &scalar(3), 8, &budget()).unwrap();
        assert_eq!(om.value, 3);
        assert_eq!(om.witness.unwrap().multiplicity(&scalar(2)), 3);
    }

    #[test]
    fn omega_in_the_integers_is_the_value() {
        let s = numerical(&[1]);
        assert_eq!(omega(&s, &scalar(5), 8, &budget()).unwrap().value, 5);
        assert_eq!(omega(&s, &scalar(1), 8, &budget()).unwrap().value, 1);
    }

    #[test]
    fn omega_matches_naive_search() {
        let s = numerical(&[6, 9, 20]);
        for g in [6, 9, 20] {
            let engine = omega(&s, &scalar(g), 8, &budget()).unwrap().value;
            let naive = crate::oracle::naive_omega(&s, &scalar(g), 5, 30).unwrap();
            if engine <= 5 {
                assert_eq!(engine, naive, "omega({})", g);
            } else {
                assert!(naive <= engine);
            }
        }
    }

    #[test]
    fn tame_degree_two_three() {
        let s = numerical(&[2, 3]);
        let t = tame_degree(&s, &scalar(2), 8, &budget()).unwrap();
        assert_eq!(t.lower, 3);
        assert_eq!(t.upper, Some(3));
        assert!(t.exact);

        let t = tame_degree(&s, &scalar(3), 8, &budget()).unwrap();
        assert_eq!(t.lower, 3);
        assert_eq!(t.upper, Some(4));
        assert!(!t.exact);
    }

    #[test]
    fn tame_degree_matches_naive_lower() {
        let s = numerical(&[2, 3]);
        let t = tame_degree(&s, &scalar(2), 8, &budget()).unwrap();
        let naive = crate::oracle::naive_tame(&s, &scalar(2), 8).unwrap();
        assert_eq!(t.lower, naive);
    }

    #[test]
    fn prime_atom_has_tame_degree_zero() {
        let s = numerical(&[1]);
        let t = tame_degree(&s, &scalar(1), 8, &budget()).unwrap();
        assert_eq!(t, TameDegreeEstimate { lower: 0, upper: Some(0), exact: true, bound_used: 8 });
    }

    #[test]
    fn tame_degree_rejects_non_atoms() {
        let s = numerical(&[2, 3]);
        assert!(tame_degree(&s, &scalar(6), 8, &budget()).is_err());
    }

    #[test]
    fn diagonal_wall_steep_atom_grows() {
        let s = MonoidSpec::DiagonalWall;
        let u = Element::vec(vec![1, 0, 0]).unwrap();
        let t6 = tame_degree(&s, &u, 6, &budget()).unwrap();
        let t8 = tame_degree(&s, &u, 8, &budget()).unwrap();
        assert_eq!(t6.lower, 8);
        assert_eq!(t8.lower, 10);
        assert_eq!(t6.upper, None);
    }

    #[test]
    fn diagonal_wall_diag_atom_stabilizes() {
        let s = MonoidSpec::DiagonalWall;
        let u = Element::vec(vec![0, 1, 1]).unwrap();
        let t4 = tame_degree(&s, &u, 4, &budget()).unwrap();
        let t6 = tame_degree(&s, &u, 6, &budget()).unwrap();
        assert_eq!(t4.lower, 3);
        assert_eq!(t6.lower, 3);
    }

    #[test]
    fn strong_primary_statuses() {
        let n = numerical(&[2, 3]);
        assert_eq!(strong_primary_report(&n, 8, 10).unwrap().status, PrimaryStatus::Certified);
        let p = MonoidSpec::PuiseuxTail;
        assert_eq!(strong_primary_report(&p, 8, 10).unwrap().status, PrimaryStatus::Certified);
        let c = MonoidSpec::sqrt_cone(2).unwrap();
        let r = strong_primary_report(&c, 8, 10).unwrap();
        assert_eq!(r.status, PrimaryStatus::RefutedAtBound);
        let d = MonoidSpec::DiagonalWall;
        assert_eq!(strong_primary_report(&d, 8, 6).unwrap().status, PrimaryStatus::RefutedAtBound);
        let fg = crate::families::make("fingen-vec: [[2]]").unwrap();
        assert_eq!(strong_primary_report(&fg, 8, 10).unwrap().status, PrimaryStatus::Evidence);
    }
}
