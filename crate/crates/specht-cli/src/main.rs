use clap::{Parser, Subcommand};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use specht_cli::{cache, dot, formats, tikz};
use specht_core::backend::{DenseBackend, TwoPartTabloidBackend};
use specht_core::homs::{duality_map, hook_filtration, second_filtration, theta_hat};
use specht_core::lattice::{
    block_candidates, compare_with_prediction, submodule_lattice, two_part_candidates,
    LatticeGraph,
};
use specht_core::partition::{binomial, dim_specht, l_p, Partition};
use specht_core::rep::rep_matrices;
use specht_core::twopart::{
    hook_decomp, hook_unique_min, hook_uniserial, nonuniserial_witness, predicted_lattice,
    profile, smallest_nonuniserial_s,
};

#[derive(Parser)]
#[command(name = "specht", version, about = "Specht module workbench over GF(2)")]
struct Cli {
    /// characteristic; only 2 is implemented
    #[arg(long, global = true, default_value_t = 2)]
    p: u128,
    /// write the primary document to this JSON file
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// emit DOT to stdout
    #[arg(long, global = true)]
    dot: bool,
    /// emit TikZ to stdout
    #[arg(long, global = true)]
    tikz: bool,
    /// cross-check oracle outputs against matrix computations where feasible
    #[arg(long, global = true)]
    verify: bool,
    /// node guard for lattice enumeration
    #[arg(long, global = true, default_value_t = 10_000)]
    guard: usize,
    /// worker threads (accepted for compatibility; execution is deterministic
    /// and single-threaded)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// module cache directory
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Oracle profile of a 2-part Specht module: factors, order, socle,
    /// uniseriality
    Predict { lambda: String },
    /// Full submodule lattice (2-part shapes via the tabloid engine, hooks
    /// via dense matrices)
    Lattice {
        lambda: Option<String>,
        /// hook shape (n−r, 1^r) given as N R
        #[arg(long, num_args = 2, value_names = ["N", "R"])]
        hook: Option<Vec<usize>>,
    },
    /// CSV atlas of hook modules over a range of (n, r)
    Hooks {
        /// n range, e.g. 8..16 (inclusive)
        #[arg(long, value_name = "A..B")]
        n: String,
        /// r range, e.g. 0..4 (inclusive); defaults to 0..n/2 per n
        #[arg(long, value_name = "A..B")]
        r: Option<String>,
    },
    /// Hook filtration(s) of S^(n−r,1^r): chain dims and generators
    Filtration { n: usize, r: usize },
    /// Verify the even-n exact sequence of two-row Specht modules
    Exactseq { n: usize },
    /// Verify the odd-n self-duality S^(n−r,1^r) ≅ S^(r+1,1^{n−r−1})*
    Dual { n: usize, r: usize },
    /// Experiments: distributivity sweeps and hook-lattice periodicity
    Conjectures {
        /// check distributivity of every 2-part lattice of this n
        #[arg(long, value_name = "N")]
        distributivity: Option<usize>,
        /// hook-periodicity: compare lattices of S^(n−r,1^r) across n's
        #[arg(long, value_name = "R")]
        hook_period: Option<usize>,
        /// n list for --hook-period, e.g. 8,12,16
        #[arg(long, value_name = "N,N,...")]
        ns: Option<String>,
    },
    /// Regenerate the classification tables (witnesses, unique-minimal
    /// cases, intermediate cases)
    Tables,
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn mismatch(msg: impl Into<String>) -> Failure {
    Failure { code: 4, msg: msg.into() }
}

fn core(e: specht_core::Error) -> Failure {
    let code = if e.0.contains("guard") { 3 } else { 2 };
    Failure { code, msg: e.0 }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure { code: 2, msg: e.to_string() }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Partition::parse(s).map_err(|e| usage(format!("bad partition '{s}': {e}")))
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("bad range '{s}' (expected A..B)")))?;
    let a = a.trim().parse().map_err(|_| usage(format!("bad range '{s}'")))?;
    let b = b.trim().parse().map_err(|_| usage(format!("bad range '{s}'")))?;
    if a > b {
        return Err(usage(format!("empty range '{s}'")));
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.p != 2 {
        return Err(usage("only p = 2 is implemented"));
    }
    if cli.threads == 0 {
        return Err(usage("--threads must be ≥ 1"));
    }
    match &cli.cmd {
        Cmd::Predict { lambda } => cmd_predict(&cli, lambda),
        Cmd::Lattice { lambda, hook } => cmd_lattice(&cli, lambda.as_deref(), hook.as_deref()),
        Cmd::Hooks { n, r } => cmd_hooks(&cli, n, r.as_deref()),
        Cmd::Filtration { n, r } => cmd_filtration(*n, *r),
        Cmd::Exactseq { n } => cmd_exactseq(*n),
        Cmd::Dual { n, r } => cmd_dual(*n, *r),
        Cmd::Conjectures { distributivity, hook_period, ns } => {
            cmd_conjectures(&cli, *distributivity, *hook_period, ns.as_deref())
        }
        Cmd::Tables => cmd_tables(),
    }
}

fn cmd_predict(cli: &Cli, lambda: &str) -> Result<(), Failure> {
    let lam = parse_partition(lambda)?;
    if !lam.is_two_part() {
        return Err(usage(format!(
            "predict needs a 2-part shape, got {}; hook shapes go through `hooks` or `lattice --hook`",
            lam.display()
        )));
    }
    let prof = profile(&lam, 2).map_err(core)?;
    let doc = formats::profile_doc(&prof).map_err(core)?;
    println!(
        "S^({}) at p=2: alpha={}, {} composition factor(s)",
        doc.lambda,
        doc.alpha,
        doc.factors.len()
    );
    for f in &doc.factors {
        println!("  d={:<3} D^({})  interval {}", f.d, f.nu, f.interval);
    }
    println!("socle: D^({})", doc.socle);
    println!("uniserial: {}", if doc.uniserial { "yes" } else { "no" });
    if let Some(out) = &cli.json {
        fs::write(out, serde_json::to_string_pretty(&doc).unwrap()).map_err(io_err)?;
    }
    Ok(())
}

fn build_lattice(
    cli: &Cli,
    shape: &Partition,
) -> Result<(LatticeGraph, Option<specht_core::twopart::TwoPartProfile>), Failure> {
    let dim = dim_specht(shape).map_err(core)?;
    let lat = if shape.is_two_part() && shape.rows() == 2 {
        if dim > 30_000 {
            return Err(usage(format!(
                "dim S^({}) = {dim} exceeds the matrix budget",
                shape.display()
            )));
        }
        let tb = TwoPartTabloidBackend::new(shape).map_err(core)?;
        let cands = two_part_candidates(shape).map_err(core)?;
        submodule_lattice(&tb, &cands, cli.guard).map_err(core)?
    } else {
        if dim > 2_100 {
            return Err(usage(format!(
                "dim S^({}) = {dim} exceeds the dense matrix budget",
                shape.display()
            )));
        }
        let rep = match cli.cache.as_deref().and_then(|d| cache::load_rep(d, shape)) {
            Some(rep) => rep,
            None => {
                let rep = rep_matrices(shape).map_err(core)?;
                if let Some(dir) = cli.cache.as_deref() {
                    cache::store_rep(dir, shape, &rep).map_err(io_err)?;
                }
                rep
            }
        };
        let dense = DenseBackend::new(rep);
        let cands = block_candidates(shape).map_err(core)?;
        submodule_lattice(&dense, &cands, cli.guard).map_err(core)?
    };
    let prof = if shape.is_two_part() {
        Some(profile(shape, 2).map_err(core)?)
    } else {
        None
    };
    Ok((lat, prof))
}

fn cmd_lattice(cli: &Cli, lambda: Option<&str>, hook: Option<&[usize]>) -> Result<(), Failure> {
    let shape = match (lambda, hook) {
        (Some(l), None) => parse_partition(l)?,
        (None, Some(h)) => Partition::hook(h[0], h[1]).map_err(core)?,
        _ => return Err(usage("give either a partition or --hook N R")),
    };
    if !(shape.is_two_part() || shape.is_hook()) {
        return Err(usage(format!(
            "lattice supports 2-part and hook shapes, got {}",
            shape.display()
        )));
    }
    let (lat, prof) = build_lattice(cli, &shape)?;
    let title = format!("S^({})", shape.display());
    let doc = formats::lattice_doc(&lat);
    println!("{title}: {} submodules", doc.nodes.len());
    let dims: Vec<String> = doc.nodes.iter().map(|n| n.dim.to_string()).collect();
    println!("dims: {}", dims.join(","));
    for e in &doc.edges {
        println!(
            "  {} -> {}  {}",
            lat.nodes[e.from].dim, lat.nodes[e.to].dim, e.label
        );
    }
    println!("uniserial: {}", if lat.is_uniserial() { "yes" } else { "no" });
    if let Some(prof) = &prof {
        let pred = predicted_lattice(prof).map_err(core)?;
        match compare_with_prediction(&lat, &pred) {
            Ok(()) => println!("prediction: agreement"),
            Err(e) => {
                let artifact = cli
                    .cache
                    .clone()
                    .unwrap_or_else(|| PathBuf::from("."))
                    .join(format!("mismatch-{}.diff", shape.display().replace(',', "_")));
                let mut diff = format!("oracle vs matrix mismatch for {title}\n{e}\n");
                diff.push_str(&format!("computed dims: {}\n", dims.join(",")));
                let pd: Vec<String> = pred.nodes.iter().map(|(_, d)| d.to_string()).collect();
                diff.push_str(&format!("predicted dims: {}\n", pd.join(",")));
                let _ = fs::write(&artifact, &diff);
                return Err(mismatch(format!(
                    "{e} (diff artifact: {})",
                    artifact.display()
                )));
            }
        }
    }
    if cli.dot {
        print!("{}", dot::lattice_dot(&doc, &title));
    }
    if cli.tikz {
        print!("{}", tikz::lattice_tikz(&doc, &title));
    }
    if let Some(out) = &cli.json {
        fs::write(out, serde_json::to_string_pretty(&doc).unwrap()).map_err(io_err)?;
    }
    Ok(())
}

fn cmd_hooks(cli: &Cli, n_range: &str, r_range: Option<&str>) -> Result<(), Failure> {
    let (n0, n1) = parse_range(n_range)?;
    if n1 > 64 {
        return Err(usage("hooks sweep capped at n ≤ 64"));
    }
    let mut header = String::from("n,r,uniserial,unique_min,case,factors");
    if cli.verify {
        header.push_str(",verified");
    }
    println!("{header}");
    for n in n0..=n1 {
        let (r0, r1) = match r_range {
            Some(s) => parse_range(s)?,
            None => (0, n / 2),
        };
        for r in r0..=r1.min(n / 2) {
            let uni = hook_uniserial(n, r).map_err(core)?;
            let (umin, case) = hook_unique_min(n, r);
            let mut factors = Vec::new();
            for j in 0..=r {
                if 2 * j >= n {
                    break; // 2-singular or out-of-range label
                }
                let m = hook_decomp(n, r, j).map_err(core)?;
                if m > 0 {
                    factors.push(format!("D^({}):{}", two_part_str(n, j), m));
                }
            }
            let mut row = format!(
                "{n},{r},{},{},{},{}",
                yn(uni),
                yn(umin),
                case.map(|c| c.to_string()).unwrap_or_default(),
                factors.join(";")
            );
            if cli.verify {
                let verdict = if n <= 13 {
                    let shape = Partition::hook(n, r).map_err(core)?;
                    let (lat, _) = build_lattice(cli, &shape)?;
                    if lat.is_uniserial() == uni {
                        "ok"
                    } else {
                        return Err(mismatch(format!(
                            "hook ({n},{r}): oracle uniserial={uni} but lattice disagrees"
                        )));
                    }
                } else {
                    "skipped"
                };
                row.push(',');
                row.push_str(verdict);
            }
            println!("{row}");
        }
    }
    Ok(())
}

fn two_part_str(n: usize, j: usize) -> String {
    if j == 0 {
        format!("{n}")
    } else {
        format!("{},{j}", n - j)
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_filtration(n: usize, r: usize) -> Result<(), Failure> {
    let mut any = false;
    if r <= n - r {
        any = true;
        let (_, chain) = hook_filtration(n, r).map_err(core)?;
        println!("first filtration of S^({}):", Partition::hook(n, r).map_err(core)?.display());
        let mut prev = 0usize;
        for (k, sub) in chain.iter().enumerate() {
            println!(
                "  M_{k}: dim {}  quotient dim {} (= dim S^({}))",
                sub.dim(),
                sub.dim() - prev,
                two_part_str(n - r + 2 * k + (r - 2 * k), r - 2 * k)
            );
            prev = sub.dim();
        }
    }
    if n % 2 == 0 && n - r <= r && r < n {
        any = true;
        let (_, chain) = second_filtration(n, r).map_err(core)?;
        println!("second filtration of S^({}):", Partition::hook(n, r).map_err(core)?.display());
        let mut prev = 0usize;
        for (l, sub) in chain.iter().enumerate() {
            let what = if l == 0 {
                format!("S^*({},{})", r, n - r)
            } else {
                format!("S^({})", two_part_str(r + 2 * l + (n - r - 2 * l), n - r - 2 * l))
            };
            println!("  N_{l}: dim {}  quotient dim {} (= dim {what})", sub.dim(), sub.dim() - prev);
            prev = sub.dim();
        }
    }
    if !any {
        return Err(usage("no filtration applies (need r ≤ n−r, or n even with n−r ≤ r)"));
    }
    Ok(())
}

fn cmd_exactseq(n: usize) -> Result<(), Failure> {
    if n % 2 != 0 {
        return Err(usage("exactseq needs even n"));
    }
    let mut prev: Option<specht_core::homs::SpechtHom> = None;
    for i in 0..n / 2 {
        let hom = theta_hat(n, i).map_err(core)?;
        let rk = hom.rank();
        if let Some(p) = &prev {
            let comp_zero = hom.compose_after(p).is_zero();
            let exact = p.rank() + rk == hom.domain.dim;
            println!(
                "junction at S^({}): im∘im = 0: {}, rank {} + rank {} = dim {}: {}",
                hom.domain.label.trim_start_matches("S^(").trim_end_matches(')'),
                yn(comp_zero),
                p.rank(),
                rk,
                hom.domain.dim,
                yn(exact)
            );
            if !comp_zero || !exact {
                return Err(mismatch(format!("exactness fails at n={n}, i={i}")));
            }
        } else {
            println!("Θ̂_0: rank {rk} (embedding of S^({n}))");
        }
        prev = Some(hom);
    }
    println!("exact sequence verified for n = {n}");
    Ok(())
}

fn cmd_dual(n: usize, r: usize) -> Result<(), Failure> {
    if n % 2 == 0 {
        return Err(usage("dual needs odd n"));
    }
    let hom = duality_map(n, r).map_err(core)?;
    let expected = binomial(n as u128 - 1, r as u128).map_err(core)?;
    println!(
        "S^({}) ≅ S^({})^*: rank {} = C({},{}) = {expected}, isomorphism verified",
        Partition::hook(n, r).map_err(core)?.display(),
        Partition::hook(n, n - r - 1).map_err(core)?.display(),
        hom.rank(),
        n - 1,
        r
    );
    Ok(())
}

/// Unlabeled digraph isomorphism for small Hasse diagrams.
fn hasse_isomorphic(a: &LatticeGraph, b: &LatticeGraph) -> bool {
    let n = a.nodes.len();
    if n != b.nodes.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let adj = |g: &LatticeGraph| {
        let mut m = vec![vec![false; g.nodes.len()]; g.nodes.len()];
        for (f, t, _) in &g.edges {
            m[*f][*t] = true;
        }
        m
    };
    let (ma, mb) = (adj(a), adj(b));
    let deg = |m: &Vec<Vec<bool>>, i: usize| {
        let outd = m[i].iter().filter(|&&x| x).count();
        let ind = (0..m.len()).filter(|&j| m[j][i]).count();
        (outd, ind)
    };
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn bt(
        k: usize,
        ma: &Vec<Vec<bool>>,
        mb: &Vec<Vec<bool>>,
        deg_a: &[(usize, usize)],
        deg_b: &[(usize, usize)],
        assign: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = assign.len();
        if k == n {
            return true;
        }
        'cand: for c in 0..n {
            if used[c] || deg_a[k] != deg_b[c] {
                continue;
            }
            for j in 0..k {
                if ma[k][j] != mb[c][assign[j]] || ma[j][k] != mb[assign[j]][c] {
                    continue 'cand;
                }
            }
            assign[k] = c;
            used[c] = true;
            if bt(k + 1, ma, mb, deg_a, deg_b, assign, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    let deg_a: Vec<_> = (0..n).map(|i| deg(&ma, i)).collect();
    let deg_b: Vec<_> = (0..n).map(|i| deg(&mb, i)).collect();
    bt(0, &ma, &mb, &deg_a, &deg_b, &mut assign, &mut used)
}

fn cmd_conjectures(
    cli: &Cli,
    distributivity: Option<usize>,
    hook_period: Option<usize>,
    ns: Option<&str>,
) -> Result<(), Failure> {
    let mut did = false;
    if let Some(n) = distributivity {
        did = true;
        if n > 14 {
            return Err(usage("distributivity sweep capped at n ≤ 14"));
        }
        for l2 in 0..=n / 2 {
            let lam = if l2 == 0 {
                Partition::new(vec![n]).map_err(core)?
            } else {
                Partition::two_part(n - l2, l2).map_err(core)?
            };
            let (lat, _) = build_lattice(cli, &lam)?;
            let dist = lat.is_distributive().map_err(core)?;
            println!(
                "S^({}): {} nodes, distributive: {}",
                lam.display(),
                lat.nodes.len(),
                yn(dist)
            );
        }
    }
    if let Some(r) = hook_period {
        did = true;
        let ns = ns.ok_or_else(|| usage("--hook-period needs --ns N,N,..."))?;
        let ns: Vec<usize> = ns
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| usage(format!("bad n list '{ns}'"))))
            .collect::<Result<_, _>>()?;
        if ns.len() < 2 {
            return Err(usage("--ns needs at least two values"));
        }
        let modulus = 1usize << l_p(r as u128, 2);
        let mut lats = Vec::new();
        for &n in &ns {
            let shape = Partition::hook(n, r).map_err(core)?;
            let (lat, _) = build_lattice(cli, &shape)?;
            println!("S^({}): {} nodes", shape.display(), lat.nodes.len());
            lats.push((n, lat));
        }
        for w in lats.windows(2) {
            let (n1, l1) = &w[0];
            let (n2, l2) = &w[1];
            let congruent = n1 % modulus == n2 % modulus;
            let iso = hasse_isomorphic(l1, l2);
            println!(
                "n={n1} vs n={n2}: n ≡ mod 2^L({r})={modulus}: {}, lattice isomorphism observed: {}",
                yn(congruent),
                yn(iso)
            );
            if congruent && !iso {
                return Err(mismatch(format!(
                    "hook-periodicity counterexample at r={r}, n={n1},{n2}"
                )));
            }
        }
    }
    if !did {
        return Err(usage("give --distributivity N and/or --hook-period R --ns ..."));
    }
    Ok(())
}

fn cmd_tables() -> Result<(), Failure> {
    println!("# smallest non-uniserial s, s even (n mod 32, s)");
    for res in 0..32u128 {
        println!("{res},{}", nonuniserial_witness(res, true).map_err(core)?);
    }
    println!("# smallest non-uniserial s, s odd (n mod 32, s)");
    for res in 0..32u128 {
        println!("{res},{}", nonuniserial_witness(res, false).map_err(core)?);
    }
    println!("# unique-minimal-submodule cases for r ≤ 16 (n mod 2^L(r), r)");
    let mut unique_min = Vec::new();
    for r in 0..=16usize {
        let m = 1usize << l_p(r as u128, 2);
        for res in 0..m {
            if hook_unique_min(res, r).0 {
                unique_min.push((res, r));
            }
        }
    }
    for (res, r) in &unique_min {
        println!("{res},{r}");
    }
    println!("# intermediate cases with a non-uniserial 2-part witness (n mod 2^L(r), r, s)");
    let mut remaining = Vec::new();
    for &(res, r) in &unique_min {
        let m = 1u128 << l_p(r as u128, 2);
        let s = if r < 2 {
            None
        } else {
            smallest_nonuniserial_s(res as u128, m, r % 2 == 0, r as u128).map_err(core)?
        };
        match s {
            Some(s) => println!("{res},{r},{s}"),
            None => remaining.push((res, r)),
        }
    }
    println!("# remaining intermediate cases (no witness; n mod 2^L(r), r)");
    for (res, r) in remaining {
        println!("{res},{r}");
    }
    Ok(())
}
