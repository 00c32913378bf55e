//! Factorization enumeration and the distance geometry on top of it.
//!
//! A factorization of a member is a multiset of atoms summing to it. The
//! enumeration is exhaustive and deterministic: atoms are tried in
//! descending lexicographic order, multiplicities run from their maximum
//! down to zero, and a branch is cut as soon as the remainder leaves the
//! monoid. The distance between two factorizations cancels their common
//! part and takes the larger residual length; the catenary degree of an
//! element is the bottleneck edge weight connecting its factorization graph.

use crate::cert::Certification;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::monoid::MonoidSpec;
use std::collections::BTreeMap;
use std::fmt;

/// Caps on exhaustive searches. `max_elements` bounds how many members a
/// monoid-wide scan may visit, `max_factorizations` bounds how many
/// factorizations a single enumeration may emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_elements: u64,
    pub max_factorizations: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_elements: 200, max_factorizations: 50_000 }
    }
}

/// A multiset of atoms, keyed canonically so equal multisets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    parts: BTreeMap<Element, u64>,
}

impl Factorization {
    pub fn empty() -> Self {
        Factorization { parts: BTreeMap::new() }
    }

    /// Builds from (atom, multiplicity) pairs; zero multiplicities are
    /// dropped, repeated atoms accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (Element, u64)>>(pairs: I) -> Self {
        let mut parts = BTreeMap::new();
        for (a, m) in pairs {
            if m > 0 {
                *parts.entry(a).or_insert(0) += m;
            }
        }
        Factorization { parts }
    }

    /// Total number of atoms counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.parts.values().sum()
    }

    pub fn multiplicity(&self, atom: &Element) -> u64 {
        self.parts.get(atom).copied().unwrap_or(0)
    }

    pub fn contains(&self, atom: &Element) -> bool {
        self.parts.contains_key(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, u64)> {
        self.parts.iter().map(|(a, &m)| (a, m))
    }

    /// Sum of the multiset in the given monoid's ambient space.
    pub fn evaluate(&self, spec: &MonoidSpec) -> Result<Element> {
        let mut acc = match spec.dim() {
            Some(d) => Element::vec(vec![0; d])?,
            None => Element::rat(0, 1)?,
        };
        for (a, m) in self.iter() {
            acc = acc.add(&a.repeat(m))?;
        }
        Ok(acc)
    }

    /// Distance to another factorization: cancel the common sub-multiset,
    /// then take the larger of the two residual lengths.
    pub fn distance(&self, other: &Factorization) -> u64 {
        let mut common = 0_u64;
        for (a, m) in self.iter() {
            common += m.min(other.multiplicity(a));
        }
        (self.length() - common).max(other.length() - common)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        write!(f, "[")?;
        for (i, (a, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if m == 1 {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}^{}", a, m)?;
            }
        }
        write!(f, "]")
    }
}

/// Non-empty, strictly increasing set of factorization lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSet {
    lengths: Vec<u64>,
}

impl LengthSet {
    pub fn from_lengths(mut lengths: Vec<u64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Input("a length set cannot be empty".into()));
        }
        lengths.sort_unstable();
        lengths.dedup();
        Ok(LengthSet { lengths })
    }

    pub fn min(&self) -> u64 {
        self.lengths[0]
    }

    pub fn max(&self) -> u64 {
        *self.lengths.last().unwrap()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lengths.binary_search(&n).is_ok()
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.lengths.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.lengths
    }

    /// Gap set: the distinct successive differences, ascending.
    pub fn delta(&self) -> Vec<u64> {
        let mut gaps: Vec<u64> =
            self.lengths.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.sort_unstable();
        gaps.dedup();
        gaps
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "}}")
    }
}

/// Atoms that can appear in a factorization of `a`: all coordinates of the
/// families are non-negative, so a dividing atom is componentwise at most `a`.
fn usable_atoms(spec: &MonoidSpec, a: &Element) -> Result<Vec<Element>> {
    match spec {
        MonoidSpec::Numerical(n) => {
            let v = a.coords()?[0];
            Ok(n.gens()
                .iter()
                .copied()
                .filter(|&g| g <= v)
                .map(|g| Element::IntVec(vec![g]))
                .collect())
        }
        MonoidSpec::PuiseuxTail => Err(Error::Unsupported(
            "factorizations of the rational tail are not enumerable; use the closed forms in the puiseux module".into(),
        )),
        _ => {
            let v = a.coords()?;
            let bound = v.iter().copied().max().unwrap_or(0);
            let atoms = spec.atoms_up_to(bound)?;
            Ok(atoms
                .into_iter()
                .filter(|u| {
                    u.coords().unwrap().iter().zip(v).all(|(x, b)| x <= b)
                })
                .collect())
        }
    }
}

/// All factorizations of `a`, each multiset exactly once.
///
/// The order is the DFS order described in the module docs and is part of
/// the contract: identical inputs yield identical output vectors. Exceeding
/// `budget.max_factorizations` is an error carrying the partial count.
pub fn factorizations(
    spec: &MonoidSpec,
    a: &Element,
    budget: &SearchBudget,
) -> Result<Vec<Factorization>> {
    if !spec.contains(a)? {
        return Err(Error::Input(format!("{} is not a member", a)));
    }
    if a.is_zero() {
        return Ok(vec![Factorization::empty()]);
    }
    let atoms = usable_atoms(spec, a)?;
    let mut order = atoms;
    order.sort_unstable();
    order.reverse();

    let mut out = Vec::new();
    let mut stack: Vec<(Element, u64)> = Vec::new();
    let rem = a.coords()?.to_vec();
    dfs(spec, &order, 0, rem, &mut stack, &mut out, budget.max_factorizations)?;
    Ok(out)
}

fn dfs(
    spec: &MonoidSpec,
    atoms: &[Element],
    idx: usize,
    rem: Vec<i64>,
    stack: &mut Vec<(Element, u64)>,
    out: &mut Vec<Factorization>,
    cap: u64,
) -> Result<()> {
    if rem.iter().all(|&c| c == 0) {
        if out.len() as u64 >= cap {
            return Err(Error::BudgetExceeded { partial: out.len() as u64 });
        }
        out.push(Factorization::from_pairs(stack.iter().cloned()));
        return Ok(());
    }
    if idx == atoms.len() {
        return Ok(());
    }
    let u = atoms[idx].coords()?;
    let k_max = rem
        .iter()
        .zip(u)
        .filter(|(_, &uc)| uc > 0)
        .map(|(&rc, &uc)| rc / uc)
        .min()
        .unwrap_or(0);
    for k in (0..=k_max).rev() {
        let next: Vec<i64> = rem.iter().zip(u).map(|(&rc, &uc)| rc - k * uc).collect();
        if k > 0 && !spec.contains_coords(&next)? {
            continue;
        }
        if k > 0 {
            stack.push((atoms[idx].clone(), k as u64));
        }
        let r = dfs(spec, atoms, idx + 1, next, stack, out, cap);
        if k > 0 {
            stack.pop();
        }
        r?;
    }
    Ok(())
}

/// Set of factorization lengths of `a`. The rational tail family is served
/// by its closed form; everything else comes from full enumeration.
pub fn length_set(spec: &MonoidSpec, a: &Element, budget: &SearchBudget) -> Result<LengthSet> {
    if let MonoidSpec::PuiseuxTail = spec {
        return crate::puiseux::length_set_closed(a.rational()?);
    }
    let z = factorizations(spec, a, budget)?;
    if z.is_empty() {
        return Err(Error::Internal(format!("member {} has no factorization", a)));
    }
    LengthSet::from_lengths(z.iter().map(|f| f.length()).collect())
}

struct UnionFind {
    p: Vec<usize>,
    sz: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { p: (0..n).collect(), sz: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.p[x] != x {
            self.p[x] = self.p[self.p[x]];
            x = self.p[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.sz[ra] < self.sz[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.p[rb] = ra;
        self.sz[ra] += self.sz[rb];
        true
    }
}

/// Catenary degree of a single member: the least N such that any two of its
/// factorizations are joined by a chain with consecutive distances at most
/// N. Zero when there is at most one factorization.
pub fn catenary_degree(spec: &MonoidSpec, a: &Element, budget: &SearchBudget) -> Result<u64> {
    let z = factorizations(spec, a, budget)?;
    if z.len() <= 1 {
        return Ok(0);
    }
    let mut edges: Vec<(u64, usize, usize)> = Vec::with_capacity(z.len() * (z.len() - 1) / 2);
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            edges.push((z[i].distance(&z[j]), i, j));
        }
    }
    edges.sort_unstable();
    let mut uf = UnionFind::new(z.len());
    let mut components = z.len();
    for (w, i, j) in edges {
        if uf.union(i, j) {
            components -= 1;
            if components == 1 {
                return Ok(w);
            }
        }
    }
    Err(Error::Internal("factorization graph failed to connect".into()))
}

/// Monoid-level catenary scan: the largest per-element catenary degree seen
/// over a bounded range of members, with the first witness attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatenaryScan {
    pub value: u64,
    pub witness: Option<Element>,
    pub scanned: u64,
    pub certification: Certification,
}

/// Scans members up to a bound and reports the maximal catenary degree.
///
/// For numerical monoids the scan window is widened to twice the Frobenius
/// number plus the largest generator, which covers every element where a
/// minimal relation can first occur; the result is still reported as a
/// lower bound. For the vector families `element_bound` is the box edge.
pub fn catenary_of_monoid(
    spec: &MonoidSpec,
    element_bound: i64,
    budget: &SearchBudget,
) -> Result<CatenaryScan> {
    let mut best: u64 = 0;
    let mut witness: Option<Element> = None;
    let mut scanned: u64 = 0;
    match spec {
        MonoidSpec::Numerical(n) => {
            let widened = 2 * (n.frobenius().max(0) + n.max_gen());
            let to = element_bound.max(widened);
            for v in 1..=to {
                if !n.is_member(v) {
                    continue;
                }
                scanned += 1;
                let a = Element::vec(vec![v])?;
                let c = catenary_degree(spec, &a, budget)?;
                if c > best {
                    best = c;
                    witness = Some(a);
                }
            }
        }
        MonoidSpec::PuiseuxTail => {
            return Err(Error::Unsupported(
                "catenary scans need factorization enumeration; see the puiseux module".into(),
            ))
        }
        _ => {
            let dim = spec.dim().unwrap();
            for v in crate::monoid::box_cells(dim, element_bound) {
                if v.iter().all(|&c| c == 0) || !spec.contains_coords(&v)? {
                    continue;
                }
                scanned += 1;
                let a = Element::vec(v)?;
                let c = catenary_degree(spec, &a, budget)?;
                if c > best {
                    best = c;
                    witness = Some(a);
                }
            }
        }
    }
    Ok(CatenaryScan { value: best, witness, scanned, certification: Certification::LowerBound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Numerical;

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
    fn factorizations_of_six_over_two_three() {
        let s = numerical(&[2, 3]);
        let z = factorizations(&s, &scalar(6), &budget()).unwrap();
        let three = scalar(3);
        let two = scalar(2);
        assert_eq!(
            z,
            vec![
                Factorization::from_pairs([(three, 2)]),
                Factorization::from_pairs([(two, 3)]),
            ]
        );
    }

    #[test]
    fn factorization_of_zero_is_empty() {
        let s = numerical(&[2, 3]);
        let z = factorizations(&s, &scalar(0), &budget()).unwrap();
        assert_eq!(z, vec![Factorization::empty()]);
        assert_eq!(z[0].length(), 0);
    }

    #[test]
    fn factorizations_reject_non_members() {
        let s = numerical(&[6, 9, 20]);
        assert!(factorizations(&s, &scalar(7), &budget()).is_err());
    }

    #[test]
    fn factorizations_evaluate_back() {
        let s = numerical(&[6, 9, 20]);
        for v in [18, 40, 60, 73] {
            if !matches!(&s, MonoidSpec::Numerical(n) if n.is_member(v)) {
                continue;
            }
            for z in factorizations(&s, &scalar(v), &budget()).unwrap() {
                assert_eq!(z.evaluate(&s).unwrap(), scalar(v));
            }
        }
    }

    #[test]
    fn length_set_of_sixty() {
        let s = numerical(&[6, 9, 20]);
        let l = length_set(&s, &scalar(60), &budget()).unwrap();
        assert_eq!(l.as_slice(), &[3, 7, 8, 9, 10]);
        assert_eq!(l.delta(), vec![1, 4]);
    }

    #[test]
    fn delta_of_interval_is_singleton() {
        let l = LengthSet::from_lengths(vec![2, 3]).unwrap();
        assert_eq!(l.delta(), vec![1]);
        let single = LengthSet::from_lengths(vec![4]).unwrap();
        assert!(single.delta().is_empty());
    }

    #[test]
    fn distance_cancels_common_part() {
        let two = scalar(2);
        let three = scalar(3);
        let z1 = Factorization::from_pairs([(two.clone(), 3), (three.clone(), 2)]);
        let z2 = Factorization::from_pairs([(three.clone(), 4)]);
        assert_eq!(z1.distance(&z2), 3);
        assert_eq!(z2.distance(&z1), 3);
        assert_eq!(z1.distance(&z1), 0);
    }

    #[test]
    fn catenary_uses_bottleneck_chains() {
        let s = numerical(&[2, 3]);
        assert_eq!(catenary_degree(&s, &scalar(2), &budget()).unwrap(), 0);
        assert_eq!(catenary_degree(&s, &scalar(6), &budget()).unwrap(), 3);
        // Z(12) = {2^6, 2^3 3^2, 3^4}: direct distance 6, chained 3.
        assert_eq!(catenary_degree(&s, &scalar(12), &budget()).unwrap(), 3);
    }

    #[test]
    fn catenary_scan_over_two_three() {
        let s = numerical(&[2, 3]);
        let scan = catenary_of_monoid(&s, 100, &budget()).unwrap();
        assert_eq!(scan.value, 3);
        assert_eq!(scan.witness, Some(scalar(6)));
        assert_eq!(scan.certification, Certification::LowerBound);
    }

    #[test]
    fn budget_exceeded_reports_partial_count() {
        let s = numerical(&[2, 3]);
        let tight = SearchBudget { max_elements: 200, max_factorizations: 5 };
        match factorizations(&s, &scalar(100), &tight) {
            Err(Error::BudgetExceeded { partial }) => assert_eq!(partial, 5),
            other => panic!("expected budget error, got {:?}", other),
        }
    }

    #[test]
    fn diagonal_wall_factorizations() {
        let s = MonoidSpec::DiagonalWall;
        let a = Element::vec(vec![2, 1, 1]).unwrap();
        let z = factorizations(&s, &a, &budget()).unwrap();
        for f in &z {
            assert_eq!(f.evaluate(&s).unwrap(), a);
        }
        // (2,1,1) = (1,1,0)+(1,0,1) = (1,0,0)+(1,1,0)+... enumerate and check count
        let atoms_used: Vec<u64> = z.iter().map(|f| f.length()).collect();
        assert!(atoms_used.contains(&2));
        // (1,0,0)+(1,0,0)+(0,1,1) is also a factorization of (2,1,1)
        assert!(atoms_used.contains(&3));
    }
}
