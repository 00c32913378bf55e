//! Slow reference implementations, deliberately naive and kept independent
//! of the enumeration engine.
//!
//! The only thing shared with the engine is the membership predicate
//! (ground truth by definition) and the plain `Factorization` container.
//! Atom detection, factorization search, the omega invariant, and tame
//! degrees are all recomputed here from their definitions with no pruning
//! beyond non-negativity. Everything in this module is exponential; call it
//! on small inputs only.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::factorize::Factorization;
use crate::monoid::MonoidSpec;

fn cube(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    fn go(dim: usize, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == dim {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=bound {
            prefix.push(c);
            go(dim, bound, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(dim, bound, &mut Vec::new(), &mut out);
    out
}

/// Atoms by direct definition: nonzero members with no two-part split into
/// nonzero members, scanned over the box (or interval) up to `bound`.
pub fn naive_atoms(spec: &MonoidSpec, bound: i64) -> Result<Vec<Element>> {
    let dim = spec
        .dim()
        .ok_or_else(|| Error::Unsupported("naive atom scan needs vector elements".into()))?;
    let mut atoms = Vec::new();
    for v in cube(dim, bound) {
        if v.iter().all(|&c| c == 0) || !spec.contains_coords(&v)? {
            continue;
        }
        let mut split = false;
        'outer: for y in cube(dim, bound) {
            if y.iter().all(|&c| c == 0) || y.iter().zip(&v).any(|(a, b)| a > b) || y == v {
                continue;
            }
            let rest: Vec<i64> = v.iter().zip(&y).map(|(b, a)| b - a).collect();
            if spec.contains_coords(&y)? && spec.contains_coords(&rest)? {
                split = true;
                break 'outer;
            }
        }
        if !split {
            atoms.push(Element::vec(v)?);
        }
    }
    Ok(atoms)
}

/// Every factorization of `a`, found by recursively choosing a
/// non-decreasing sequence of naive atoms. No membership pruning: a branch
/// dies only when a coordinate would go negative.
pub fn naive_factorizations(spec: &MonoidSpec, a: &Element) -> Result<Vec<Factorization>> {
    if !spec.contains(a)? {
        return Err(Error::Input(format!("{} is not a member", a)));
    }
    let v = a.coords()?;
    let bound = v.iter().copied().max().unwrap_or(0);
    let atoms: Vec<Vec<i64>> = naive_atoms(spec, bound)?
        .into_iter()
        .map(|e| e.coords().unwrap().to_vec())
        .filter(|u| u.iter().zip(v).all(|(x, b)| x <= b))
        .collect();

    fn go(
        atoms: &[Vec<i64>],
        from: usize,
        rem: &mut Vec<i64>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem.iter().all(|&c| c == 0) {
            out.push(chosen.clone());
            return;
        }
        for i in from..atoms.len() {
            if atoms[i].iter().zip(rem.iter()).all(|(u, r)| u <= r) {
                for (r, u) in rem.iter_mut().zip(&atoms[i]) {
                    *r -= u;
                }
                chosen.push(i);
                go(atoms, i, rem, chosen, out);
                chosen.pop();
                for (r, u) in rem.iter_mut().zip(&atoms[i]) {
                    *r += u;
                }
            }
        }
    }

    let mut picks = Vec::new();
    go(&atoms, 0, &mut v.to_vec(), &mut Vec::new(), &mut picks);
    let mut out: Vec<Factorization> = picks
        .into_iter()
        .map(|idx| {
            Factorization::from_pairs(
                idx.into_iter().map(|i| (Element::IntVec(atoms[i].clone()), 1)),
            )
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn naive_length_set(spec: &MonoidSpec, a: &Element) -> Result<Vec<u64>> {
    let mut lengths: Vec<u64> =
        naive_factorizations(spec, a)?.iter().map(|f| f.length()).collect();
    lengths.sort_unstable();
    lengths.dedup();
    Ok(lengths)
}

/// Omega by definition over a bounded window: the largest size of a tuple
/// of non-units whose sum `u` divides while dividing no proper sub-tuple
/// sum. Tuples draw from the non-units in the box up to `bound` and have at
/// most `max_len` entries.
pub fn naive_omega(spec: &MonoidSpec, u: &Element, max_len: usize, bound: i64) -> Result<u64> {
    if !spec.contains(u)? || u.is_zero() {
        return Err(Error::Input(format!("{} is not a nonzero member", u)));
    }
    let dim = u.coords()?.len();
    let mut non_units: Vec<Vec<i64>> = Vec::new();
    for v in cube(dim, bound) {
        if !v.iter().all(|&c| c == 0) && spec.contains_coords(&v)? {
            non_units.push(v);
        }
    }

    let divides_sum = |sum: &[i64]| -> Result<bool> {
        let diff: Vec<i64> = sum.iter().zip(u.coords().unwrap()).map(|(s, c)| s - c).collect();
        spec.contains_coords(&diff)
    };

    let mut best = 0_u64;
    let mut tuple: Vec<usize> = Vec::new();
    fn go(
        non_units: &[Vec<i64>],
        from: usize,
        max_len: usize,
        tuple: &mut Vec<usize>,
        dim: usize,
        divides_sum: &dyn Fn(&[i64]) -> Result<bool>,
        best: &mut u64,
    ) -> Result<()> {
        if !tuple.is_empty() {
            let sum = |idx: &[usize]| -> Vec<i64> {
                let mut s = vec![0_i64; dim];
                for &i in idx {
                    for (a, b) in s.iter_mut().zip(&non_units[i]) {
                        *a += b;
                    }
                }
                s
            };
            if divides_sum(&sum(tuple))? {
                let n = tuple.len();
                let mut minimal = true;
                for mask in 1..(1_u32 << n) - 1 {
                    let sub: Vec<usize> = (0..n)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| tuple[i])
                        .collect();
                    if divides_sum(&sum(&sub))? {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    *best = (*best).max(n as u64);
                }
            }
        }
        if tuple.len() == max_len {
            return Ok(());
        }
        for i in from..non_units.len() {
            tuple.push(i);
            go(non_units, i, max_len, tuple, dim, divides_sum, best)?;
            tuple.pop();
        }
        Ok(())
    }
    go(&non_units, 0, max_len, &mut tuple, dim, &divides_sum, &mut best)?;
    Ok(best)
}

/// Tame degree of the atom `u` by definition over a bounded window of its
/// multiples: for each multiple, the farthest any factorization sits from
/// the nearest one containing `u`, maximized over the window.
pub fn naive_tame(spec: &MonoidSpec, u: &Element, radius: i64) -> Result<u64> {
    if !spec.is_atom(u)? {
        return Err(Error::Input(format!("{} is not an atom", u)));
    }
    let dim = u.coords()?.len();
    let mut best = 0_u64;
    for s in cube(dim, radius) {
        if !spec.contains_coords(&s)? {
            continue;
        }
        let a = u.add(&Element::vec(s)?)?;
        let z = naive_factorizations(spec, &a)?;
        let with_u: Vec<&Factorization> = z.iter().filter(|f| f.contains(u)).collect();
        if with_u.is_empty() {
            return Err(Error::Internal(format!("no factorization of {} contains {}", a, u)));
        }
        for f in &z {
            if f.contains(u) {
                continue;
            }
            let near = with_u.iter().map(|g| f.distance(g)).min().unwrap();
            best = best.max(near);
        }
    }
    Ok(best)
}
