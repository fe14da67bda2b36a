//! Spinning and standard-basis Hom spaces (the meataxe workhorses).

use alloc::vec::Vec;

use crate::f2::{kernel_of_table, F2Matrix, F2Vector, PivotTable, Subspace};
use crate::rep::RepModule;
use crate::{err, Result};

/// Smallest generator-invariant subspace containing the seeds. `cutoff`
/// stops the closure early once the dimension exceeds it (returns the
/// partial span and `false`).
pub fn spin_apply<F>(
    ambient: usize,
    num_gens: usize,
    apply: F,
    seeds: &[F2Vector],
    cutoff: Option<usize>,
) -> (Subspace, bool)
where
    F: Fn(usize, &F2Vector) -> F2Vector,
{
    let mut table = PivotTable::new(ambient);
    let mut frontier: Vec<F2Vector> = Vec::new();
    for s in seeds {
        let mut v = s.clone();
        table.reduce(&mut v);
        if !v.is_zero() {
            table.insert_reduced(v.clone());
            frontier.push(v);
        }
    }
    let mut complete = true;
    'outer: while let Some(v) = frontier.pop() {
        for g in 0..num_gens {
            let mut w = apply(g, &v);
            table.reduce(&mut w);
            if !w.is_zero() {
                table.insert_reduced(w.clone());
                frontier.push(w);
                if let Some(c) = cutoff {
                    if table.rank() > c {
                        complete = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    (Subspace::from_table(&table), complete)
}

pub fn spin(m: &RepModule, seeds: &[F2Vector]) -> Subspace {
    spin_apply(m.dim, m.gens.len(), |g, v| m.gens[g].matvec(v), seeds, None).0
}

/// A deterministic spinning transcript of a module from its first basis
/// vector: `steps` regenerate a basis, `relations` pin down the rejected
/// products as linear combinations of it.
#[derive(Clone, Debug)]
pub struct SpinProgram {
    pub dim: usize,
    pub num_gens: usize,
    /// (parent basis index, generator index) for each accepted vector after
    /// the seed
    pub steps: Vec<(usize, usize)>,
    /// (parent basis index, generator index, coefficients over the basis)
    pub relations: Vec<(usize, usize, F2Vector)>,
}

pub fn spin_program(d: &RepModule) -> Result<SpinProgram> {
    if d.dim == 0 {
        return err("cannot build a spin program for the zero module");
    }
    let dim = d.dim;
    let num_gens = d.gens.len();
    // basis[i] as vectors; pivot table with companions tracking coordinates
    // over the accepted basis
    let mut basis: Vec<F2Vector> = Vec::new();
    // companion width dim+1: rejected products get a scratch unit at index
    // basis.len(), which can equal dim once the basis is complete
    let mut table = PivotTable::with_transform(dim, dim + 1);
    let seed = F2Vector::unit(dim, 0);
    table.insert_tracked(seed.clone(), F2Vector::unit(dim + 1, 0));
    basis.push(seed);
    let mut steps = Vec::new();
    let mut relations = Vec::new();
    let mut next = 0usize;
    while next < basis.len() {
        let parent = next;
        for g in 0..num_gens {
            let w = d.gens[g].matvec(&basis[parent]);
            let count = basis.len();
            match table.insert_tracked(w.clone(), F2Vector::unit(dim + 1, count)) {
                None => {
                    // independent: accepted as basis vector #count
                    steps.push((parent, g));
                    basis.push(w);
                }
                Some(comp) => {
                    // w = Σ comp_i basis_i (comp includes the unit we added,
                    // which cancels out of the tracked combination)
                    let mut c = comp;
                    c.set(count, false);
                    relations.push((parent, g, c.slice(0, count)));
                }
            }
        }
        next += 1;
    }
    debug_assert_eq!(basis.len(), dim);
    Ok(SpinProgram { dim, num_gens, steps, relations })
}

impl SpinProgram {
    /// Replay inside `m` from a concrete seed; returns the generated vectors
    /// if every relation holds, `None` otherwise.
    pub fn replay(&self, m: &RepModule, seed: &F2Vector) -> Option<Vec<F2Vector>> {
        assert_eq!(m.gens.len(), self.num_gens);
        let mut vecs = Vec::with_capacity(self.dim);
        vecs.push(seed.clone());
        for &(parent, g) in &self.steps {
            let w = m.gens[g].matvec(&vecs[parent]);
            vecs.push(w);
        }
        for (parent, g, c) in &self.relations {
            let mut w = m.gens[*g].matvec(&vecs[*parent]);
            for i in c.iter_ones() {
                w.xor_assign(&vecs[i]);
            }
            if !w.is_zero() {
                return None;
            }
        }
        Some(vecs)
    }

    /// Path-product matrices P_i with basis_i = P_i · seed, built inside `m`.
    fn path_products(&self, m: &RepModule) -> Vec<F2Matrix> {
        let mut ps = Vec::with_capacity(self.dim);
        ps.push(F2Matrix::identity(m.dim));
        for &(parent, g) in &self.steps {
            ps.push(m.gens[g].mul(&ps[parent]));
        }
        ps
    }
}

/// The solution space {w ∈ M : replaying D's program from w satisfies all
/// relations} — i.e. Hom(D, M) through images of the seed. Constraint rows
/// are accumulated incrementally with early exit once only 0 remains.
pub fn hom_space(program: &SpinProgram, m: &RepModule) -> Subspace {
    assert_eq!(m.gens.len(), program.num_gens);
    let ps = program.path_products(m);
    let mut table = PivotTable::new(m.dim);
    for (parent, g, c) in &program.relations {
        // rows of (G_g P_parent − Σ c_i P_i)
        let mut con = m.gens[*g].mul(&ps[*parent]);
        for i in c.iter_ones() {
            for r in 0..m.dim {
                let row = ps[i].row(r).to_vec();
                let mut v = F2Vector::zero(m.dim);
                v.xor_assign_words(&row);
                let mut dst = con.row_vec(r);
                dst.xor_assign(&v);
                for (w, src) in con.row_mut(r).iter_mut().zip(dst.words()) {
                    *w = *src;
                }
            }
        }
        for r in 0..m.dim {
            table.insert(con.row_vec(r));
            if table.rank() == m.dim {
                return Subspace::zero(m.dim);
            }
        }
    }
    kernel_of_table(&table)
}
