//! Explicit GF(2) representations: generator matrices on the standard
//! polytabloid basis, Gram forms, simple quotients and duals.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::f2::{kernel, F2Matrix, F2Vector, QuotientMap};
use crate::partition::{is_p_regular, Partition};
use crate::tableau::{StandardBasis, TabloidSpace};
use crate::{err, Result};

/// A module for S_n over GF(2), given by the action of the adjacent
/// transpositions s_1 = (1 2), …, s_{n−1} = (n−1 n) on a chosen basis.
#[derive(Clone, Debug)]
pub struct RepModule {
    pub n: usize,
    pub dim: usize,
    /// gens[i] is the matrix of s_{i+1} = (i+1, i+2)
    pub gens: Vec<F2Matrix>,
    pub label: String,
}

impl RepModule {
    /// Involution, braid and distant-commutation identities, as exact matrix
    /// equalities.
    pub fn validate(&self) -> Result<()> {
        if self.gens.len() + 1 != self.n {
            return err("expected n−1 generators");
        }
        let id = F2Matrix::identity(self.dim);
        for (i, g) in self.gens.iter().enumerate() {
            if g.rows() != self.dim || g.cols() != self.dim {
                return err("generator has wrong shape");
            }
            if g.mul(g) != id {
                return err(format!("s_{} is not an involution in {}", i + 1, self.label));
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let (a, b) = (&self.gens[i], &self.gens[i + 1]);
            if a.mul(&b.mul(a)) != b.mul(&a.mul(b)) {
                return err(format!("braid relation fails at s_{} in {}", i + 1, self.label));
            }
            for j in i + 2..self.gens.len() {
                let c = &self.gens[j];
                if a.mul(c) != c.mul(a) {
                    return err(format!(
                        "distant generators s_{} and s_{} do not commute in {}",
                        i + 1,
                        j + 1,
                        self.label
                    ));
                }
            }
        }
        Ok(())
    }

    /// Act by s_{i+1} (0-based generator index).
    pub fn apply_adjacent(&self, i: usize, v: &F2Vector) -> F2Vector {
        self.gens[i].matvec(v)
    }

    /// Act by the transposition (a b), 1 ≤ a < b ≤ n, via the factorization
    /// (a b) = s_{b−1}…s_{a+1}·s_a·s_{a+1}…s_{b−1}.
    pub fn apply_transposition(&self, a: usize, b: usize, v: &F2Vector) -> F2Vector {
        assert!(a != b && a >= 1 && b >= 1 && a <= self.n && b <= self.n);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let mut v = v.clone();
        for i in (a..b).rev() {
            v = self.apply_adjacent(i - 1, &v);
        }
        for i in a + 1..b {
            v = self.apply_adjacent(i - 1, &v);
        }
        v
    }

    /// Act by an arbitrary permutation given as images (entry e ↦ perm[e−1]).
    pub fn apply_perm(&self, perm: &[usize], v: &F2Vector) -> F2Vector {
        assert_eq!(perm.len(), self.n);
        // selection-sort perm into the identity; the transpositions applied
        // in reverse order reproduce the permutation
        let mut p: Vec<usize> = perm.to_vec();
        let mut swaps = Vec::new();
        for target in 1..=self.n {
            let pos = p.iter().position(|&x| x == target).unwrap();
            if pos != target - 1 {
                p.swap(pos, target - 1);
                swaps.push((p[pos], target));
            }
        }
        // p is now the identity; perm = product of the recorded transpositions
        let mut v = v.clone();
        for &(a, b) in swaps.iter().rev() {
            v = self.apply_transposition(a, b, &v);
        }
        v
    }

    /// The dual module: generators transposed (each s_i is an involution, so
    /// (s_i⁻¹)ᵀ = s_iᵀ).
    pub fn dual(&self) -> RepModule {
        RepModule {
            n: self.n,
            dim: self.dim,
            gens: self.gens.iter().map(|g| g.transpose()).collect(),
            label: format!("dual({})", self.label),
        }
    }
}

/// S^λ on the standard polytabloid basis: the column for standard t under
/// s_i is straighten(s_i · t).
pub fn rep_matrices(lambda: &Partition) -> Result<RepModule> {
    let mut basis = StandardBasis::new(lambda);
    let dim = basis.dim();
    let n = lambda.n();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    let tableaux = basis.tableaux.clone();
    for i in 1..n {
        let mut m = F2Matrix::zero(dim, dim);
        for (j, t) in tableaux.iter().enumerate() {
            let moved = t.apply_transposition(i, i + 1);
            let col = basis.straighten(&moved)?;
            for r in col.iter_ones() {
                m.set(r, j, true);
            }
        }
        gens.push(m);
    }
    Ok(RepModule {
        n,
        dim,
        gens,
        label: format!("S^({})", lambda.display()),
    })
}

/// Standard polytabloids expanded over the tabloid basis, as rows.
pub fn standard_expansion(lambda: &Partition) -> (TabloidSpace, Vec<F2Vector>) {
    let basis = StandardBasis::new(lambda);
    let space = TabloidSpace::new(lambda);
    let rows = basis.tableaux.iter().map(|t| space.polytabloid(t)).collect();
    (space, rows)
}

/// G[s][t] = ⟨e_s, e_t⟩ mod 2 over the standard basis.
pub fn gram_matrix(lambda: &Partition) -> F2Matrix {
    let (_, rows) = standard_expansion(lambda);
    let dim = rows.len();
    let mut g = F2Matrix::zero(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let b = rows[i].dot(&rows[j]);
            g.set(i, j, b);
            g.set(j, i, b);
        }
    }
    g
}

/// D^λ = S^λ / (S^λ ∩ S^λ⊥) for 2-regular λ, with the quotient map kept.
pub struct SimpleQuotient {
    pub module: RepModule,
    pub quotient: QuotientMap,
}

pub fn simple_module(lambda: &Partition) -> Result<SimpleQuotient> {
    if !is_p_regular(lambda, 2) {
        return err(format!("{lambda} is 2-singular; D^λ is not defined"));
    }
    let ambient = rep_matrices(lambda)?;
    let g = gram_matrix(lambda);
    // radical = {v : Gv = 0} in standard-basis coordinates
    let rad = kernel(&g);
    let q = rad.quotient();
    let dim = q.dim();
    let mut gens = Vec::with_capacity(ambient.gens.len());
    for big in &ambient.gens {
        let mut m = F2Matrix::zero(dim, dim);
        for j in 0..dim {
            let lifted = q.lift(&F2Vector::unit(dim, j));
            let col = q.project(&big.matvec(&lifted));
            for r in col.iter_ones() {
                m.set(r, j, true);
            }
        }
        gens.push(m);
    }
    Ok(SimpleQuotient {
        module: RepModule {
            n: ambient.n,
            dim,
            gens,
            label: format!("D^({})", lambda.display()),
        },
        quotient: q,
    })
}
