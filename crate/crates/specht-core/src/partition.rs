//! Partitions, dominance, digit combinatorics, residues/blocks and the
//! closed-form Specht dimension formulas.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{err, Result};

/// A partition of n: weakly decreasing positive parts, no trailing zeros.
/// The empty partition (of 0) is legal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// 1-based node coordinates in a Young diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NodeCoord {
    pub row: usize,
    pub col: usize,
}

impl NodeCoord {
    pub fn in_diagram(&self, lambda: &Partition) -> bool {
        self.row >= 1 && self.col >= 1 && self.row <= lambda.parts.len() && self.col <= lambda.parts[self.row - 1]
    }
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return err(format!("parts not weakly decreasing: {:?}", parts));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return err("zero part before a positive part");
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn two_part(a: usize, b: usize) -> Result<Self> {
        Partition::new(vec![a, b])
    }

    pub fn hook(n: usize, r: usize) -> Result<Self> {
        if r >= n && !(n == 0 && r == 0) {
            return err(format!("hook (n-r, 1^r) needs r < n, got n={n} r={r}"));
        }
        let mut parts = vec![n - r];
        parts.extend(core::iter::repeat(1).take(r));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_two_part(&self) -> bool {
        self.parts.len() <= 2
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts: Vec<usize> = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Parse the shared grammar: comma list with exponents, e.g. "6,1^4".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (base, exp) = match piece.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (piece, "1"),
            };
            let b: usize = base
                .parse()
                .map_err(|_| crate::Error(format!("bad part {base:?} in partition {s:?}")))?;
            let e: usize = exp
                .parse()
                .map_err(|_| crate::Error(format!("bad exponent {exp:?} in partition {s:?}")))?;
            for _ in 0..e {
                parts.push(b);
            }
        }
        Partition::new(parts)
    }

    pub fn display(&self) -> String {
        if self.parts.is_empty() {
            return String::new();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            let run = j - i;
            if run == 1 {
                out.push(format!("{}", self.parts[i]));
            } else {
                out.push(format!("{}^{}", self.parts[i], run));
            }
            i = j;
        }
        out.join(",")
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.display())
    }
}

/// A composition: nonnegative parts, trailing zeros normalized away but
/// interior zeros permitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts: Vec<usize> = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Dominance: every prefix sum of λ is ≥ that of μ.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.n() != mu.n() {
        return err(format!("dominance needs equal sizes: {} vs {}", lambda.n(), mu.n()));
    }
    let k = lambda.rows().max(mu.rows());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..k {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// p-regular: no part repeated p or more times.
pub fn is_p_regular(lambda: &Partition, p: usize) -> bool {
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i >= p {
            return false;
        }
        i = j;
    }
    true
}

/// Digitwise containment in base p: every p-adic digit of b is 0 or equals
/// the matching digit of a.
pub fn contains_p(a: u128, b: u128, p: u128) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let (da, db) = (a % p, b % p);
        if db != 0 && db != da {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Smallest L with r < p^L; L_p(0) = 0.
pub fn l_p(r: u128, p: u128) -> u32 {
    let mut l = 0;
    let mut pw = 1u128;
    while r >= pw {
        pw *= p;
        l += 1;
    }
    l
}

/// 2-adic valuation of a positive integer.
pub fn val2(a: u128) -> Result<u32> {
    if a == 0 {
        return err("2-adic valuation of 0 is undefined here");
    }
    Ok(a.trailing_zeros())
}

/// Per-residue node counts: entry i counts nodes A with rsd(A) = c − r mod p.
pub fn residue_contents(lambda: &Partition, p: usize) -> Vec<usize> {
    let mut counts = vec![0usize; p];
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            // rows and columns are 1-based; residue = col − row mod p
            let rsd = (c as i64 + 1 - (r as i64 + 1)).rem_euclid(p as i64) as usize;
            counts[rsd] += 1;
        }
    }
    counts
}

/// Nakayama: same block iff residue contents agree.
pub fn same_block(lambda: &Partition, mu: &Partition, p: usize) -> Result<bool> {
    if lambda.n() != mu.n() {
        return err("same_block needs partitions of equal size");
    }
    Ok(residue_contents(lambda, p) == residue_contents(mu, p))
}

/// Binomial coefficient in 128-bit arithmetic; overflow is a rejected input.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or_else(|| crate::Error(String::from("binomial overflow in 128 bits")))?;
        acc /= i + 1;
    }
    Ok(acc)
}

/// dim S^λ by closed form: hooks C(n−1,r); 2-part C(n,λ₂) − C(n,λ₂−1).
/// General shapes go through explicit standard-tableau enumeration instead.
pub fn dim_specht(lambda: &Partition) -> Result<u128> {
    let n = lambda.n() as u128;
    if lambda.rows() == 0 {
        return Ok(1);
    }
    if lambda.is_two_part() {
        let l2 = lambda.part(1) as u128;
        let a = binomial(n, l2)?;
        let b = if l2 == 0 { 0 } else { binomial(n, l2 - 1)? };
        return Ok(a - b);
    }
    if lambda.is_hook() {
        let r = (lambda.rows() - 1) as u128;
        return binomial(n - 1, r);
    }
    err(format!(
        "no closed form for shape {}; use standard-tableau enumeration",
        lambda
    ))
}

/// Number of semistandard λ-tableaux of type μ (rows weakly increase,
/// columns strictly increase), by direct DFS fill.
pub fn semistandard_count(lambda: &Partition, mu: &Composition) -> Result<u128> {
    if lambda.n() != mu.n() {
        return err("semistandard_count needs |λ| = |μ|");
    }
    let shape: Vec<usize> = lambda.parts().to_vec();
    let mut remaining: Vec<usize> = mu.parts().to_vec();
    let nvals = remaining.len();
    // fill row-wise; entry must be ≥ left neighbour and > upper neighbour
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();

    fn dfs(
        shape: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        nvals: usize,
        r: usize,
        c: usize,
    ) -> u128 {
        if r == shape.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 && c < shape[r - 1] {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            lo
        };
        let mut total = 0u128;
        for v in lo..=nvals {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            total += dfs(shape, grid, remaining, nvals, nr, nc);
            remaining[v - 1] += 1;
        }
        total
    }

    if shape.is_empty() {
        return Ok(1);
    }
    Ok(dfs(&shape, &mut grid, &mut remaining, nvals, 0, 0))
}

/// All partitions of n (lexicographic descending), for test sweeps.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("6,1^4").parts(), &[6, 1, 1, 1, 1]);
        assert_eq!(p("9,5").parts(), &[9, 5]);
        assert_eq!(p("6,1^4").display(), "6,1^4");
        assert_eq!(p("9,5").display(), "9,5");
        assert_eq!(Partition::parse("6,0").unwrap().parts(), &[6]);
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(p("7^2").display(), "7^2");
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("4,1"), &p("3,2")).unwrap());
        assert!(!dominates(&p("3,3"), &p("4,2")).unwrap());
        for mu in partitions_of(6) {
            assert!(dominates(&p("6"), &mu).unwrap());
        }
        assert!(dominates(&p("4,1"), &p("3,3")).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=8 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(dominates(a, a).unwrap());
                for b in &ps {
                    if dominates(a, b).unwrap() && dominates(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if dominates(a, b).unwrap() && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(!is_p_regular(&p("5,5"), 2));
        assert!(is_p_regular(&p("6,5"), 2));
        assert!(!is_p_regular(&p("6,1^4"), 2));
        assert!(is_p_regular(&p("5,5"), 3));
    }

    #[test]
    fn digit_containment() {
        assert!(contains_p(6, 2, 2));
        assert!(!contains_p(5, 2, 2));
        assert!(contains_p(14, 4, 2));
        // transitivity over all small triples
        for a in 0..256u128 {
            for b in 0..256u128 {
                if !contains_p(a, b, 2) {
                    continue;
                }
                for c in 0..256u128 {
                    if contains_p(b, c, 2) {
                        assert!(contains_p(a, c, 2));
                    }
                }
            }
        }
    }

    #[test]
    fn l_and_val() {
        assert_eq!(l_p(5, 2), 3);
        assert_eq!(l_p(0, 2), 0);
        assert_eq!(l_p(8, 2), 4);
        assert_eq!(val2(5).unwrap(), 0);
        assert_eq!(val2(12).unwrap(), 2);
        assert_eq!(val2(2).unwrap(), 1);
        assert!(val2(0).is_err());
    }

    #[test]
    fn residues_and_blocks() {
        assert_eq!(residue_contents(&p("2,1"), 2), vec![1, 2]);
        assert_eq!(residue_contents(&p("1"), 2), vec![1, 0]);
        assert_eq!(residue_contents(&p("3,1"), 2), residue_contents(&p("2,2"), 2));
        assert!(same_block(&p("3,1"), &p("2,2"), 2).unwrap());
        assert!(same_block(&p("3,1"), &p("3,1"), 2).unwrap());
        // §4: (n−i−1,i) and (n−i−2,i+1) lie in different blocks for n even
        for n in [8usize, 10, 12, 14] {
            for i in 0..(n - 1) / 2 {
                let a = Partition::two_part(n - 1 - i, i).unwrap();
                let b = Partition::two_part(n - 2 - i, i + 1).unwrap();
                if a.n() == b.n() {
                    assert!(!same_block(&a, &b, 2).unwrap(), "n={n} i={i}");
                }
            }
        }
        for lam in partitions_of(6) {
            assert_eq!(residue_contents(&lam, 2).iter().sum::<usize>(), 6);
        }
    }

    #[test]
    fn specht_dims() {
        assert_eq!(dim_specht(&p("9,5")).unwrap(), 1001);
        assert_eq!(dim_specht(&p("6,1^4")).unwrap(), 126);
        assert_eq!(dim_specht(&p("7")).unwrap(), 1);
        assert_eq!(dim_specht(&Partition::empty()).unwrap(), 1);
        assert_eq!(dim_specht(&p("1^5")).unwrap(), 1);
        for n in 2..=12 {
            for r in 0..n {
                let h = Partition::hook(n, r).unwrap();
                assert_eq!(dim_specht(&h).unwrap(), binomial(n as u128 - 1, r as u128).unwrap());
            }
        }
        assert!(dim_specht(&p("3,2,2")).is_err());
    }

    #[test]
    fn semistandard_examples() {
        // unique semistandard (n−i,i)-tableau of type (n−i−1,i+1)
        for n in [8usize, 10, 12, 14] {
            for i in 0..n / 2 {
                let lam = Partition::two_part(n - i, i).unwrap();
                let mu = Composition::new(vec![n - i - 1, i + 1]);
                assert_eq!(semistandard_count(&lam, &mu).unwrap(), 1, "n={n} i={i}");
                for u in 2..=i + 1 {
                    let mu = Composition::new(vec![n - i + u - 1, i + 1 - u]);
                    assert_eq!(semistandard_count(&lam, &mu).unwrap(), 0, "n={n} i={i} u={u}");
                }
            }
        }
        let lam = p("4");
        assert_eq!(semistandard_count(&lam, &Composition::new(vec![4])).unwrap(), 1);
    }

    #[test]
    fn conjugate_and_hooks() {
        assert_eq!(p("6,1^4").conjugate(), p("5,1^5"));
        assert_eq!(Partition::hook(10, 4).unwrap(), p("6,1^4"));
        assert!(p("6,1^4").is_hook());
        assert!(!p("9,5").is_hook());
        assert!(p("9,5").is_two_part());
    }

    #[test]
    fn binomial_overflow_rejected() {
        assert!(binomial(1000, 500).is_err());
        assert_eq!(binomial(14, 7).unwrap(), 3432);
        assert_eq!(binomial(5, 9).unwrap(), 0);
    }
}
