//! Monoid families and their exact membership arithmetic.
//!
//! Every family is commutative, cancellative, and reduced (zero is the only
//! unit), so divisibility `a | b` is exactly `b - a` being a member, and the
//! atoms are the minimal nonzero members. Membership predicates accept raw
//! signed coordinates so that divisibility tests need no intermediate
//! non-negative element.

use crate::element::{Element, Rational, SignedDiff};
use crate::error::{Error, Result};
use num::rational::Ratio;
use num::Zero;
use std::collections::HashSet;
use std::fmt;

/// Upper bound on `min_gen * max_gen` for exact Frobenius computation.
const FROBENIUS_SIEVE_LIMIT: i64 = 50_000_000;

/// Upper bound on box grid cells in atom enumeration.
const BOX_CELL_LIMIT: u64 = 4_000_000;

/// A numerical monoid: a submonoid of the non-negative integers whose
/// generators have greatest common divisor 1.
///
/// Construction normalizes the generating set to the minimal one (the atom
/// set) and computes the Frobenius number, the largest integer outside the
/// monoid, by sieving. `frobenius` is -1 when every non-negative integer is
/// a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerical {
    gens: Vec<i64>,
    frobenius: i64,
    member_below: Vec<bool>,
}

impl Numerical {
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Input("numerical monoid needs at least one generator".into()));
        }
        if let Some(&g) = raw.iter().find(|&&g| g < 1) {
            return Err(Error::Input(format!("generator {} is not a positive integer", g)));
        }
        let mut gens: Vec<i64> = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0_i64, |acc, &x| num::integer::gcd(acc, x));
        if g != 1 {
            return Err(Error::Input(format!(
                "generators must have greatest common divisor 1, got {}",
                g
            )));
        }
        let g_min = gens[0];
        let g_max = *gens.last().unwrap();
        if g_min.saturating_mul(g_max) > FROBENIUS_SIEVE_LIMIT {
            return Err(Error::Input(format!(
                "generators too large for exact sieving: {} * {} exceeds {}",
                g_min, g_max, FROBENIUS_SIEVE_LIMIT
            )));
        }

        let mut bound = (g_min * g_max + 2 * g_max + 2) as usize;
        let (frobenius, table) = loop {
            let table = sieve(&gens, bound);
            if let Some(f) = confirmed_frobenius(&table, g_min as usize) {
                break (f, table);
            }
            bound *= 2;
        };

        let member_below: Vec<bool> = if frobenius < 0 {
            Vec::new()
        } else {
            table[..=(frobenius as usize)].to_vec()
        };

        let minimal: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&g| {
                let half = g / 2;
                !(1..=half).any(|s| {
                    member_at(&member_below, frobenius, s) && member_at(&member_below, frobenius, g - s)
                })
            })
            .collect();
        debug_assert!(!minimal.is_empty());

        Ok(Numerical { gens: minimal, frobenius, member_below })
    }

    /// Minimal generating set, ascending. These are exactly the atoms.
    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    /// Largest integer outside the monoid, or -1 if there is none.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn min_gen(&self) -> i64 {
        self.gens[0]
    }

    pub fn max_gen(&self) -> i64 {
        *self.gens.last().unwrap()
    }

    pub fn is_member(&self, x: i64) -> bool {
        member_at(&self.member_below, self.frobenius, x)
    }
}

fn member_at(table: &[bool], frobenius: i64, x: i64) -> bool {
    if x < 0 {
        false
    } else if x > frobenius {
        true
    } else {
        table[x as usize]
    }
}

fn sieve(gens: &[i64], bound: usize) -> Vec<bool> {
    let mut table = vec![false; bound + 1];
    table[0] = true;
    for i in 1..=bound {
        table[i] = gens
            .iter()
            .any(|&g| (g as usize) <= i && table[i - g as usize]);
    }
    table
}

/// The largest non-member is confirmed once the table ends with a run of
/// `g_min` consecutive members: adding the smallest generator then reaches
/// every larger integer.
fn confirmed_frobenius(table: &[bool], g_min: usize) -> Option<i64> {
    let mut run = 0_usize;
    let mut last_false: i64 = -1;
    for (i, &m) in table.iter().enumerate() {
        if m {
            run += 1;
        } else {
            run = 0;
            last_false = i as i64;
        }
    }
    (run >= g_min).then_some(last_false)
}

/// Finitely generated submonoid of a free commutative monoid, given by
/// non-negative nonzero integer generator vectors of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGenVec {
    gens: Vec<Vec<i64>>,
    dim: usize,
}

impl FinGenVec {
    pub fn new(raw: Vec<Vec<i64>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Input("generator list must be non-empty".into()));
        }
        let dim = raw[0].len();
        if dim == 0 {
            return Err(Error::Input("generator vectors must have at least one coordinate".into()));
        }
        let mut gens = Vec::with_capacity(raw.len());
        for v in raw {
            if v.len() != dim {
                return Err(Error::Dimension { expected: dim, got: v.len() });
            }
            if v.iter().any(|&c| c < 0) {
                return Err(Error::Input(format!(
                    "generator {:?} has a negative coordinate; only non-negative vectors are supported",
                    v
                )));
            }
            if v.iter().all(|&c| c == 0) {
                return Err(Error::Input("the zero vector cannot be a generator".into()));
            }
            gens.push(v);
        }
        gens.sort_unstable();
        gens.dedup();
        let fg = FinGenVec { gens, dim };
        // Reducedness: no generator may have an additive inverse in the
        // monoid. Automatic here since all coordinates are non-negative,
        // but checked against the membership predicate all the same.
        for g in &fg.gens {
            let neg: Vec<i64> = g.iter().map(|&c| -c).collect();
            if fg.is_member(&neg) {
                return Err(Error::Internal(format!(
                    "generator {:?} has an additive inverse; monoid is not reduced",
                    g
                )));
            }
        }
        Ok(fg)
    }

    pub fn gens(&self) -> &[Vec<i64>] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_member(&self, v: &[i64]) -> bool {
        if v.len() != self.dim || v.iter().any(|&c| c < 0) {
            return false;
        }
        if v.iter().all(|&c| c == 0) {
            return true;
        }
        let mut dead: HashSet<Vec<i64>> = HashSet::new();
        self.reach_zero(v, &mut dead)
    }

    fn reach_zero(&self, v: &[i64], dead: &mut HashSet<Vec<i64>>) -> bool {
        if v.iter().all(|&c| c == 0) {
            return true;
        }
        if dead.contains(v) {
            return false;
        }
        for g in &self.gens {
            if g.iter().zip(v).all(|(a, b)| a <= b) {
                let rest: Vec<i64> = v.iter().zip(g).map(|(b, a)| b - a).collect();
                if self.reach_zero(&rest, dead) {
                    return true;
                }
            }
        }
        dead.insert(v.to_vec());
        false
    }
}

/// A concrete monoid instance.
#[derive(Clone, Debug, PartialEq)]
pub enum MonoidSpec {
    /// Numerical monoid, text form `numerical: [a, b, ...]`.
    Numerical(Numerical),
    /// Lattice points (x, y) with x >= 1, y >= 0, y^2 < m x^2, plus the
    /// origin; `m` squarefree. Text form `sqrt-cone: m = k`.
    SqrtCone { m: i64 },
    /// Triples (a, b, c) of non-negative integers with a > 0 or b = c.
    /// Text form `diagonal-wall`.
    DiagonalWall,
    /// Zero together with every rational q >= 1. Text form `puiseux-tail`.
    /// Atom-by-atom enumeration is unsupported; see [`crate::puiseux`].
    PuiseuxTail,
    /// Finitely generated vector monoid, text form `fingen-vec: [[..], ...]`.
    FinGenVec(FinGenVec),
}

/// Carrier kind of a monoid's elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Vector(usize),
    Rational,
}

impl MonoidSpec {
    pub fn sqrt_cone(m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Input(format!("m must be at least 2, got {}", m)));
        }
        let mut d = 2_i64;
        while d * d <= m {
            if m % (d * d) == 0 {
                return Err(Error::Input(format!("m must be squarefree, got {}", m)));
            }
            d += 1;
        }
        Ok(MonoidSpec::SqrtCone { m })
    }

    pub fn element_kind(&self) -> ElementKind {
        match self {
            MonoidSpec::Numerical(_) => ElementKind::Vector(1),
            MonoidSpec::SqrtCone { .. } => ElementKind::Vector(2),
            MonoidSpec::DiagonalWall => ElementKind::Vector(3),
            MonoidSpec::PuiseuxTail => ElementKind::Rational,
            MonoidSpec::FinGenVec(fg) => ElementKind::Vector(fg.dim()),
        }
    }

    /// Ambient dimension for vector families, `None` for rational ones.
    pub fn dim(&self) -> Option<usize> {
        match self.element_kind() {
            ElementKind::Vector(d) => Some(d),
            ElementKind::Rational => None,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            MonoidSpec::Numerical(_) => "numerical",
            MonoidSpec::SqrtCone { .. } => "sqrt-cone",
            MonoidSpec::DiagonalWall => "diagonal-wall",
            MonoidSpec::PuiseuxTail => "puiseux-tail",
            MonoidSpec::FinGenVec(_) => "fingen-vec",
        }
    }

    pub fn as_numerical(&self) -> Option<&Numerical> {
        match self {
            MonoidSpec::Numerical(n) => Some(n),
            _ => None,
        }
    }

    /// Membership on raw signed coordinates. Negative inputs are simply
    /// non-members; this is the predicate divisibility tests run on.
    pub fn contains_coords(&self, v: &[i64]) -> Result<bool> {
        let d = self.dim().ok_or_else(|| {
            Error::Input("this family has rational elements, not vectors".into())
        })?;
        if v.len() != d {
            return Err(Error::Dimension { expected: d, got: v.len() });
        }
        Ok(match self {
            MonoidSpec::Numerical(n) => n.is_member(v[0]),
            MonoidSpec::SqrtCone { m } => {
                let (x, y) = (v[0], v[1]);
                (x == 0 && y == 0)
                    || (x >= 1
                        && y >= 0
                        && (y as i128) * (y as i128) < (*m as i128) * (x as i128) * (x as i128))
            }
            MonoidSpec::DiagonalWall => {
                let (a, b, c) = (v[0], v[1], v[2]);
                a >= 0 && b >= 0 && c >= 0 && (a > 0 || b == c)
            }
            MonoidSpec::FinGenVec(fg) => fg.is_member(v),
            MonoidSpec::PuiseuxTail => unreachable!("rational family"),
        })
    }

    /// Membership for rational values, signed. Zero and everything >= 1.
    pub fn contains_rational(&self, q: Rational) -> Result<bool> {
        match self {
            MonoidSpec::PuiseuxTail => Ok(q.is_zero() || q >= Ratio::from_integer(1)),
            _ => Err(Error::Input("this family has vector elements, not rationals".into())),
        }
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        match x {
            Element::IntVec(v) => self.contains_coords(v),
            Element::Rat(q) => self.contains_rational(*q),
        }
    }

    fn contains_diff(&self, d: &SignedDiff) -> Result<bool> {
        match d {
            SignedDiff::Vec(v) => self.contains_coords(v),
            SignedDiff::Rat(q) => self.contains_rational(*q),
        }
    }

    /// Whether `a` divides `b`, i.e. `b - a` is a member. Both arguments
    /// must be members.
    pub fn divides(&self, a: &Element, b: &Element) -> Result<bool> {
        for e in [a, b] {
            if !self.contains(e)? {
                return Err(Error::Input(format!("{} is not a member", e)));
            }
        }
        self.contains_diff(&b.signed_diff(a)?)
    }

    /// Atoms with every coordinate at most `bound`, ascending
    /// lexicographically. Numerical monoids return their generators up to
    /// `bound`; rational families are rejected.
    pub fn atoms_up_to(&self, bound: i64) -> Result<Vec<Element>> {
        if bound < 0 {
            return Err(Error::Input(format!("bound must be non-negative, got {}", bound)));
        }
        match self {
            MonoidSpec::Numerical(n) => n
                .gens()
                .iter()
                .copied()
                .filter(|&g| g <= bound)
                .map(|g| Element::vec(vec![g]))
                .collect(),
            MonoidSpec::PuiseuxTail => Err(Error::Unsupported(
                "every rational in [1, 2) is an atom; use the closed forms in the puiseux module"
                    .into(),
            )),
            _ => {
                let dim = self.dim().unwrap();
                let cells = checked_box_cells(dim, bound)?;
                let member: Vec<bool> = cells
                    .iter()
                    .map(|v| self.contains_coords(v))
                    .collect::<Result<_>>()?;
                let strides = box_strides(dim, bound);
                let mut atoms = Vec::new();
                for (i, v) in cells.iter().enumerate() {
                    if !member[i] || v.iter().all(|&c| c == 0) {
                        continue;
                    }
                    if !decomposable_in_box(v, &member, &strides) {
                        atoms.push(Element::vec(v.clone())?);
                    }
                }
                Ok(atoms)
            }
        }
    }

    /// Whether a member is an atom: nonzero and not a sum of two nonzero
    /// members. Errors on non-members.
    pub fn is_atom(&self, x: &Element) -> Result<bool> {
        if !self.contains(x)? {
            return Err(Error::Input(format!("{} is not a member", x)));
        }
        if x.is_zero() {
            return Ok(false);
        }
        match self {
            MonoidSpec::Numerical(n) => Ok(n.gens().contains(&x.coords()?[0])),
            MonoidSpec::PuiseuxTail => {
                let q = x.rational()?;
                Ok(q >= Ratio::from_integer(1) && q < Ratio::from_integer(2))
            }
            _ => {
                let v = x.coords()?;
                let bound = v.iter().copied().max().unwrap();
                let dim = v.len();
                let cells = checked_box_cells(dim, bound)?;
                for y in &cells {
                    if y.iter().all(|&c| c == 0) || y == v || y.iter().zip(v).any(|(a, b)| a > b) {
                        continue;
                    }
                    let rest: Vec<i64> = v.iter().zip(y).map(|(b, a)| b - a).collect();
                    if self.contains_coords(y)? && self.contains_coords(&rest)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::families::render(self))
    }
}

/// All lattice points of `[0, bound]^dim` in ascending lexicographic order.
pub fn box_cells(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
        for prefix in &out {
            for c in 0..=bound {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn checked_box_cells(dim: usize, bound: i64) -> Result<Vec<Vec<i64>>> {
    let cells = (bound as u64 + 1).checked_pow(dim as u32);
    match cells {
        Some(n) if n <= BOX_CELL_LIMIT => Ok(box_cells(dim, bound)),
        _ => Err(Error::Input(format!(
            "box [0, {}]^{} is too large to enumerate",
            bound, dim
        ))),
    }
}

/// Index strides for a `[0, bound]^dim` grid stored in lexicographic order.
pub fn box_strides(dim: usize, bound: i64) -> Vec<usize> {
    let side = bound as usize + 1;
    let mut strides = vec![1_usize; dim];
    for i in (0..dim.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * side;
    }
    strides
}

pub fn box_index(v: &[i64], strides: &[usize]) -> usize {
    v.iter().zip(strides).map(|(&c, &s)| c as usize * s).sum()
}

fn decomposable_in_box(v: &[i64], member: &[bool], strides: &[usize]) -> bool {
    let dim = v.len();
    let mut y = vec![0_i64; dim];
    loop {
        let proper = !y.iter().all(|&c| c == 0) && y != v;
        if proper && member[box_index(&y, strides)] {
            let rest: Vec<i64> = v.iter().zip(&y).map(|(b, a)| b - a).collect();
            if member[box_index(&rest, strides)] {
                return true;
            }
        }
        // odometer over 0 <= y <= v componentwise
        let mut i = dim;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if y[i] < v[i] {
                y[i] += 1;
                for c in y.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerical(gens: &[i64]) -> MonoidSpec {
        MonoidSpec::Numerical(Numerical::new(gens).unwrap())
    }

    #[test]
    fn numerical_membership_and_frobenius() {
        let n = Numerical::new(&[2, 3]).unwrap();
        assert_eq!(n.frobenius(), 1);
        assert!(n.is_member(0));
        assert!(!n.is_member(1));
        assert!(n.is_member(5));
        assert!(!n.is_member(-2));

        let n = Numerical::new(&[6, 9, 20]).unwrap();
        assert_eq!(n.frobenius(), 43);
        assert!(!n.is_member(43));
        assert!(n.is_member(44));
        assert!(n.is_member(15));
        assert!(!n.is_member(7));

        let n = Numerical::new(&[3, 5]).unwrap();
        assert_eq!(n.frobenius(), 7);
    }

    #[test]
    fn numerical_requires_coprime_generators() {
        let err = Numerical::new(&[4, 6]).unwrap_err();
        assert!(err.to_string().contains("common divisor"));
    }

    #[test]
    fn numerical_normalizes_to_minimal_generators() {
        let n = Numerical::new(&[2, 3, 4, 7]).unwrap();
        assert_eq!(n.gens(), &[2, 3]);
        let n = Numerical::new(&[1, 5]).unwrap();
        assert_eq!(n.gens(), &[1]);
        assert_eq!(n.frobenius(), -1);
    }

    #[test]
    fn divides_is_membership_of_difference() {
        let s = numerical(&[2, 3]);
        let two = Element::scalar(2).unwrap();
        let seven = Element::scalar(7).unwrap();
        let three = Element::scalar(3).unwrap();
        assert!(s.divides(&two, &seven).unwrap());
        // 4 - 3 = 1 is outside the monoid
        assert!(!s.divides(&three, &Element::scalar(4).unwrap()).unwrap());
        assert!(s.divides(&two, &two).unwrap());
        assert!(s.divides(&Element::scalar(0).unwrap(), &seven).unwrap());
    }

    #[test]
    fn divides_rejects_non_members() {
        let s = numerical(&[6, 9, 20]);
        let five = Element::scalar(5).unwrap();
        let fifteen = Element::scalar(15).unwrap();
        assert!(s.divides(&five, &fifteen).is_err());
    }

    #[test]
    fn sqrt_cone_membership() {
        let s = MonoidSpec::sqrt_cone(2).unwrap();
        for (v, want) in [
            (vec![0, 0], true),
            (vec![1, 0], true),
            (vec![1, 1], true),
            (vec![1, 2], false),
            (vec![0, 1], false),
            (vec![5, 7], true),
            (vec![5, 8], false),
            (vec![-1, 0], false),
        ] {
            assert_eq!(s.contains_coords(&v).unwrap(), want, "at {:?}", v);
        }
    }

    #[test]
    fn sqrt_cone_requires_squarefree_m() {
        assert!(MonoidSpec::sqrt_cone(4).is_err());
        assert!(MonoidSpec::sqrt_cone(12).is_err());
        assert!(MonoidSpec::sqrt_cone(1).is_err());
        assert!(MonoidSpec::sqrt_cone(6).is_ok());
    }

    #[test]
    fn sqrt_cone_atoms_in_unit_box() {
        let s = MonoidSpec::sqrt_cone(2).unwrap();
        let atoms = s.atoms_up_to(1).unwrap();
        let want: Vec<Element> = [vec![1, 0], vec![1, 1]]
            .into_iter()
            .map(|v| Element::vec(v).unwrap())
            .collect();
        assert_eq!(atoms, want);
    }

    #[test]
    fn diagonal_wall_membership() {
        let s = MonoidSpec::DiagonalWall;
        assert!(s.contains_coords(&[0, 0, 0]).unwrap());
        assert!(s.contains_coords(&[0, 2, 2]).unwrap());
        assert!(!s.contains_coords(&[0, 1, 2]).unwrap());
        assert!(s.contains_coords(&[1, 5, 0]).unwrap());
        assert!(!s.contains_coords(&[-1, 0, 0]).unwrap());
    }

    #[test]
    fn diagonal_wall_atoms_in_small_box() {
        let s = MonoidSpec::DiagonalWall;
        let atoms = s.atoms_up_to(2).unwrap();
        let want: Vec<Element> = [
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 0, 1],
            vec![1, 0, 2],
            vec![1, 1, 0],
            vec![1, 2, 0],
        ]
        .into_iter()
        .map(|v| Element::vec(v).unwrap())
        .collect();
        assert_eq!(atoms, want);
    }

    #[test]
    fn is_atom_matches_generator_status() {
        let s = numerical(&[6, 9, 20]);
        assert!(s.is_atom(&Element::scalar(9).unwrap()).unwrap());
        assert!(!s.is_atom(&Element::scalar(15).unwrap()).unwrap());
        assert!(!s.is_atom(&Element::scalar(0).unwrap()).unwrap());
        assert!(s.is_atom(&Element::scalar(5).unwrap()).is_err());
    }

    #[test]
    fn puiseux_membership_and_atoms() {
        let s = MonoidSpec::PuiseuxTail;
        assert!(s.contains(&Element::rat(0, 1).unwrap()).unwrap());
        assert!(!s.contains(&Element::rat(1, 2).unwrap()).unwrap());
        assert!(s.contains(&Element::rat(7, 2).unwrap()).unwrap());
        assert!(s.is_atom(&Element::rat(3, 2).unwrap()).unwrap());
        assert!(!s.is_atom(&Element::rat(2, 1).unwrap()).unwrap());
        assert!(matches!(s.atoms_up_to(5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn fingen_vec_membership() {
        let fg = FinGenVec::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(fg.is_member(&[3, 4]));
        assert!(!fg.is_member(&[-1, 0]));
        let fg = FinGenVec::new(vec![vec![2]]).unwrap();
        assert!(fg.is_member(&[4]));
        assert!(!fg.is_member(&[3]));
    }

    #[test]
    fn fingen_vec_rejects_bad_generators() {
        assert!(FinGenVec::new(vec![vec![1, 0], vec![0]]).is_err());
        assert!(FinGenVec::new(vec![vec![0, 0]]).is_err());
        assert!(FinGenVec::new(vec![vec![1, -1]]).is_err());
        assert!(FinGenVec::new(vec![]).is_err());
    }

    #[test]
    fn fingen_vec_atoms_are_minimal_generators() {
        let s = MonoidSpec::FinGenVec(FinGenVec::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap());
        let atoms = s.atoms_up_to(2).unwrap();
        let want: Vec<Element> = [vec![0, 1], vec![1, 0]]
            .into_iter()
            .map(|v| Element::vec(v).unwrap())
            .collect();
        assert_eq!(atoms, want);
    }

    #[test]
    fn box_cells_are_lexicographically_ascending() {
        let cells = box_cells(2, 1);
        assert_eq!(cells, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
