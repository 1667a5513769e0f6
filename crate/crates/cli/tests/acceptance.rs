//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use walkgroup::classifying::{classify, BlockScheme, Budgets, Certification};
use walkgroup::{
    abelianize, build_b, build_classifying_graph, check_lemma_conditions, homotopic, pi12_presentation,
    smith_normal_form, tietze_simplify, todd_coxeter, verify_svk, AbelianInvariants, Budget, Cover, FiniteGroup,
    Graph, Mode, SvkInput, SvkOptions, SvkVerdict, Verdict, Walk,
};

type Check = Result<String, String>;

type Criterion = (u32, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn load(name: &str) -> Graph {
    Graph::from_json(&std::fs::read_to_string(fixture(name)).expect("fixture exists")).expect("fixture parses")
}

/// Runs `invariants` through the CLI on `g` and returns the parsed report.
fn cli_invariants(dir: &Path, g: &Graph, name: &str) -> Result<Value, String> {
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, g.to_json()).map_err(|e| e.to_string())?;
    let (out, err, code) =
        walkgroup_cli::run(["walkgroup", "--no-timestamp", "invariants", "--graph", path.to_str().unwrap()]);
    ensure(code == 0, format!("{name}: exit {code}: {err}"))?;
    serde_json::from_str(&out).map_err(|e| e.to_string())
}

fn invariants_of(report: &Value) -> AbelianInvariants {
    serde_json::from_value(report["invariants"].clone()).expect("invariants field")
}

fn criterion_1() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for n in 1..=10 {
        let r = cli_invariants(dir.path(), &Graph::path(n + 1), &format!("p{}", n + 1))?;
        ensure(r["group"] == "trivial group", format!("P_{}: {}", n + 1, r["group"]))?;
        ensure(invariants_of(&r).is_trivial(), format!("P_{}: nontrivial abelianization", n + 1))?;
    }
    Ok("P_2..P_11 trivial".into())
}

fn criterion_2() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for n in [3, 5, 6, 7, 8] {
        let r = cli_invariants(dir.path(), &Graph::cycle(n), &format!("c{n}"))?;
        ensure(r["group"] == "free of rank 1", format!("C_{n}: {}", r["group"]))?;
        ensure(invariants_of(&r) == AbelianInvariants { free_rank: 1, torsion: vec![] }, format!("C_{n}: abelianization"))?;
    }
    let r = cli_invariants(dir.path(), &Graph::cycle(4), "c4")?;
    ensure(r["group"] == "trivial group", format!("C_4: {}", r["group"]))?;
    Ok("C_3,5,6,7,8 free of rank 1; C_4 trivial".into())
}

fn criterion_3() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let r = cli_invariants(dir.path(), &load("wedge.json"), "wedge")?;
    ensure(invariants_of(&r) == AbelianInvariants { free_rank: 2, torsion: vec![] }, "abelianization is not Z^2")?;
    let rels = r["simplified"]["relators"].as_array().map_or(usize::MAX, Vec::len);
    ensure(rels == 0, format!("{rels} relators after simplification"))?;
    Ok(format!("abelianization Z^2, {} generators, 0 relators", r["simplified"]["generators"].as_array().unwrap().len()))
}

fn criterion_4() -> Check {
    let opts = SvkOptions::default();
    let verdict = |g: &Graph, input: SvkInput, base: &str, force: bool| -> Result<SvkVerdict, String> {
        verify_svk(g, &input, base, SvkOptions { force, ..opts }).map(|r| r.verdict).map_err(|e| e.to_string())
    };
    let wedge = verdict(&load("wedge.json"), SvkInput::Pair(load("wedge_left.json"), load("wedge_right.json")), "0", false)?;
    ensure(wedge == SvkVerdict::Agree, format!("wedge: {wedge:?}"))?;
    let base: Vec<String> = vec!["0".into(), "1".into()];
    let c5 = load("c5.json");
    let cover = Cover::new(&c5, vec![load("c5_short.json"), load("c5_long.json")]).map_err(|e| e.to_string())?;
    let r = verify_svk(&c5, &SvkInput::BaseSet(cover, base.clone()), "0", opts).map_err(|e| e.to_string())?;
    ensure(r.verdict == SvkVerdict::Agree && r.colimit_invariants.free_rank == 1, format!("C_5: {:?}", r.verdict))?;
    let p4 = verdict(&load("p4.json"), SvkInput::Pair(load("p4_left.json"), load("p4_right.json")), "1", false)?;
    ensure(p4 == SvkVerdict::Agree, format!("P_4: {p4:?}"))?;
    let c4 = load("c4.json");
    let cover = Cover::new(&c4, vec![load("c4_short.json"), load("c4_long.json")]).map_err(|e| e.to_string())?;
    let forced = verdict(&c4, SvkInput::BaseSet(cover, base), "0", true)?;
    ensure(forced == SvkVerdict::Disagree, format!("forced C_4: {forced:?}"))?;
    Ok("wedge, C_5, P_4 agree; forced C_4 disagrees".into())
}

fn criterion_5() -> Check {
    let b = build_b().map_err(|e| e.to_string())?;
    let g = &b.graph;
    ensure(g.is_connected(), "B is disconnected")?;
    ensure(g.cycles(3).is_empty(), "B has a 3-cycle")?;
    let p = pi12_presentation(g, g.label(0), Mode::Pi12).map_err(|e| e.to_string())?;
    let order = todd_coxeter(&p, walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET).order();
    ensure(order == Some(1), format!("coset enumeration on the raw presentation gave {order:?}"))?;
    let corners = b.corner_indices();
    for &c in &corners {
        let layers = g.walk_targets(c, 4);
        for &d in corners.iter().filter(|&&d| d != c) {
            for len in [1, 2, 4] {
                ensure(layers[len].binary_search(&d).is_err(), format!("walk of length {len} between corners"))?;
            }
        }
    }
    Ok(format!(
        "{} vertices, {} edges, {} generators, order 1",
        g.vertex_count(),
        g.edge_count(),
        p.generator_count()
    ))
}

/// Size of the abelianization of `g`, computed as `|G| / |[G, G]|` with the
/// commutator subgroup obtained by closure.
fn abelianization_order(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut sub: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    for a in 0..n {
        for b in 0..n {
            sub.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    loop {
        let prods: Vec<usize> = sub.iter().flat_map(|&x| sub.iter().map(move |&y| (x, y))).map(|(x, y)| g.mul(x, y)).collect();
        let before = sub.len();
        sub.extend(prods);
        if sub.len() == before {
            return n / sub.len();
        }
    }
}

fn classifying_groups() -> Vec<(&'static str, FiniteGroup, AbelianInvariants)> {
    let ab = |t: &[u64]| AbelianInvariants { free_rank: 0, torsion: t.to_vec() };
    vec![
        ("Z/4", FiniteGroup::cyclic(4), ab(&[4])),
        ("Z/5", FiniteGroup::cyclic(5), ab(&[5])),
        ("Z/2xZ/2", FiniteGroup::from_spec("product:cyclic:2,cyclic:2").unwrap(), ab(&[2, 2])),
        ("S3", FiniteGroup::symmetric(3), ab(&[2])),
    ]
}

fn criterion_6() -> Check {
    let mut summary = Vec::new();
    for (name, g, expected_ab) in classifying_groups() {
        let start = Instant::now();
        ensure(expected_ab.order() == Some(abelianization_order(&g) as u128), format!("{name}: abelianization oracle"))?;
        let c = classify(&g, BlockScheme::Corrected).map_err(|e| e.to_string())?;
        let x = &c.quotient;
        ensure(x.is_connected(), format!("{name}: quotient disconnected"))?;
        let s = tietze_simplify(&pi12_presentation(x, x.label(0), Mode::Pi12).map_err(|e| e.to_string())?, 50);
        let order = todd_coxeter(&s, walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET).order();
        ensure(order == Some(g.order()), format!("{name}: coset order {order:?}"))?;
        let ab = abelianize(&s);
        ensure(ab == expected_ab, format!("{name}: abelianization {ab}"))?;
        let report = check_lemma_conditions(&c.xtilde.graph, &g, &c.action, Budgets::default());
        ensure(report.pi12_trivial == Certification::Certified, format!("{name}: cover {:?}", report.pi12_trivial))?;
        ensure(report.all_true(), format!("{name}: {:?}", report.offenders))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(300), format!("{name}: took {elapsed:?}"))?;
        summary.push(format!("{name} order {} ab {ab}", g.order()));
    }
    Ok(summary.join("; "))
}

fn criterion_7() -> Check {
    let mut summary = Vec::new();
    for (name, g) in [("1", FiniteGroup::trivial()), ("Z/2", FiniteGroup::cyclic(2)), ("Z/3", FiniteGroup::cyclic(3))] {
        let start = Instant::now();
        let x = build_classifying_graph(&g).map_err(|e| e.to_string())?;
        ensure(x.is_connected(), format!("{name}: disconnected"))?;
        let s = tietze_simplify(&pi12_presentation(&x, x.label(0), Mode::Pi12).map_err(|e| e.to_string())?, 50);
        let order = todd_coxeter(&s, walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET).order();
        ensure(order == Some(g.order()), format!("{name}: coset order {order:?}"))?;
        ensure(start.elapsed() < Duration::from_secs(300), format!("{name}: too slow"))?;
        summary.push(format!("{name} -> {}", g.order()));
    }
    Ok(summary.join(", "))
}

fn criterion_8() -> Check {
    for (name, g, _) in classifying_groups() {
        let x = build_classifying_graph(&g).map_err(|e| e.to_string())?;
        ensure(x.cycles(3).is_empty(), format!("{name}: quotient has a 3-cycle"))?;
        let inv = |mode| -> Result<AbelianInvariants, String> {
            let p = pi12_presentation(&x, x.label(0), mode).map_err(|e| e.to_string())?;
            Ok(abelianize(&tietze_simplify(&p, 50)))
        };
        let (pi, a1) = (inv(Mode::Pi12)?, inv(Mode::A1)?);
        ensure(pi == a1, format!("{name}: pi12 {pi} vs a1 {a1}"))?;
    }
    Ok("no 3-cycles; a1 and pi12 invariants agree for all four groups".into())
}

// ---------------------------------------------------------------------------
// Property suites with independent oracles.

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class, as
/// edge lists on `0..n`.
fn connected_graphs_up_to_iso(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            if !is_connected(n, &edges) {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> =
                        edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push((n, edges));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (u, v) in [(a, b), (b, a)] {
                if u == x && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn to_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new((0..n).map(|i| i.to_string()), edges.iter().map(|&(a, b)| (a.to_string(), b.to_string()))).unwrap()
}

/// Integer lattice spanned by a set of vectors, in row echelon form, with a
/// membership test. Plain Euclidean row operations, no shared code with the
/// library.
struct Lattice {
    rows: Vec<(usize, Vec<i64>)>,
}

impl Lattice {
    fn new(mut vs: Vec<Vec<i64>>, dim: usize) -> Lattice {
        let mut rows = Vec::new();
        for col in 0..dim {
            loop {
                let mut nz: Vec<usize> = (0..vs.len()).filter(|&i| vs[i][col] != 0).collect();
                if nz.len() <= 1 {
                    if let Some(&i) = nz.first() {
                        rows.push((col, vs.swap_remove(i)));
                    }
                    break;
                }
                nz.sort_by_key(|&i| vs[i][col].abs());
                let p = vs[nz[0]].clone();
                for &i in &nz[1..] {
                    let q = vs[i][col] / p[col];
                    for (x, y) in vs[i].iter_mut().zip(&p) {
                        *x -= q * y;
                    }
                }
            }
        }
        Lattice { rows }
    }

    fn contains(&self, v: &[i64]) -> bool {
        let mut t = v.to_vec();
        for (col, r) in &self.rows {
            if t[*col] % r[*col] != 0 {
                return false;
            }
            let q = t[*col] / r[*col];
            for (x, y) in t.iter_mut().zip(r) {
                *x -= q * y;
            }
        }
        t.iter().all(|&x| x == 0)
    }
}

/// Signed edge-traversal counts of a closed walk.
fn flow(edge_index: &HashMap<(usize, usize), usize>, nedges: usize, w: &[usize]) -> Vec<i64> {
    let mut f = vec![0; nedges];
    for e in w.windows(2) {
        let (a, b) = (e[0], e[1]);
        f[edge_index[&(a.min(b), a.max(b))]] += if a < b { 1 } else { -1 };
    }
    f
}

fn closed_walks(adj: &[Vec<usize>], base: usize, max_len: usize, out: &mut Vec<Vec<usize>>) {
    fn go(adj: &[Vec<usize>], base: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() > 1 && *cur.last().unwrap() == base {
            out.push(cur.clone());
        }
        if cur.len() > max_len {
            return;
        }
        for &y in &adj[*cur.last().unwrap()] {
            cur.push(y);
            go(adj, base, max_len, cur, out);
            cur.pop();
        }
    }
    go(adj, base, max_len, &mut vec![base], out);
}

/// The 4-cycle boundaries span the relations of the abelianized group, so a
/// walk homotopic to a constant has edge flow in their integer span.
fn suite_a() -> Check {
    let graphs = connected_graphs_up_to_iso(6);
    let (mut walks, mut equivalent) = (0usize, 0usize);
    for (n, edges) in &graphs {
        let g = to_graph(*n, edges);
        let edge_index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut adj = vec![Vec::new(); *n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut squares = Vec::new();
        for p in permutations(*n).iter().filter(|_| *n >= 4) {
            let c = &p[..4];
            let cyc = [c[0], c[1], c[2], c[3], c[0]];
            if cyc.windows(2).all(|e| edge_index.contains_key(&(e[0].min(e[1]), e[0].max(e[1])))) {
                squares.push(flow(&edge_index, edges.len(), &cyc));
            }
        }
        let lattice = Lattice::new(squares, edges.len());
        let mut memo: HashMap<Vec<usize>, bool> = HashMap::new();
        for base in 0..*n {
            let mut raw = Vec::new();
            closed_walks(&adj, base, 8, &mut raw);
            for w in raw {
                walks += 1;
                let walk = Walk::new(&g, w.clone()).map_err(|e| e.to_string())?;
                let key = walk.reduce().vertices().to_vec();
                let eq = *memo.entry(key).or_insert_with(|| {
                    let budget = Budget { max_walk_length: walk.len() + 9, max_states: 300 };
                    matches!(homotopic(&g, &walk, &Walk::trivial(base), budget), Ok(Verdict::Equivalent(_)))
                });
                if eq {
                    equivalent += 1;
                    ensure(
                        lattice.contains(&flow(&edge_index, edges.len(), &w)),
                        format!("walk {w:?} in graph {edges:?} is equivalent to a constant but has nonzero homology"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{} graphs, {walks} closed walks, {equivalent} null-homotopic", graphs.len()))
}

fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    let extra = rng.gen_range(0..=n * (n - 1) / 4);
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    to_graph(n, &edges.into_iter().collect::<Vec<_>>())
}

fn suite_b() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = random_connected(&mut rng, n);
        let inv: Vec<AbelianInvariants> = g
            .labels()
            .iter()
            .map(|b| abelianize(&tietze_simplify(&pi12_presentation(&g, b, Mode::Pi12).unwrap(), 50)))
            .collect();
        ensure(inv.windows(2).all(|w| w[0] == w[1]), format!("graph {i} ({:?}): {inv:?}", g.edge_labels()))?;
    }
    Ok("200 random graphs".into())
}

fn suite_c() -> Check {
    let mut count = 0;
    for (n, edges) in connected_graphs_up_to_iso(6) {
        let g = to_graph(n, &edges);
        if !g.cycles(4).is_empty() {
            continue;
        }
        count += 1;
        let rank = edges.len() + 1 - n;
        let p = pi12_presentation(&g, "0", Mode::Pi12).map_err(|e| e.to_string())?;
        ensure(p.generator_count() == rank && p.relator_count() == 0, format!("{edges:?}: presentation {p}"))?;
        let ab = abelianize(&p);
        ensure(ab == AbelianInvariants { free_rank: rank, torsion: vec![] }, format!("{edges:?}: {ab}"))?;
    }
    Ok(format!("{count} graphs free of rank E - V + 1"))
}

/// Determinant by fraction-free elimination.
fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let (mut sign, mut prev) = (1, 1i128);
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the factors are `d_k / d_{k-1}`.
fn invariant_factors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(c) {
        let mut d = 0i128;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect()).collect();
                d = gcd(d, bareiss(minor));
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}

fn random_unimodular(rng: &mut StdRng, n: usize) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            let k = rng.gen_range(-2..=2);
            for j in 0..n {
                u[a][j] += k * u[b][j];
            }
        }
    }
    u
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
}

fn suite_d() -> Check {
    let mut rng = StdRng::seed_from_u64(0xd1a9);
    for t in 0..500 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let m: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let s = smith_normal_form(&m);
        ensure(s.diagonal.windows(2).all(|w| w[1] % w[0] == 0), format!("matrix {t}: chain {:?}", s.diagonal))?;
        let oracle = invariant_factors(&m);
        ensure(s.diagonal == oracle, format!("matrix {t}: {:?} vs oracle {oracle:?}", s.diagonal))?;
        let moved = matmul(&matmul(&random_unimodular(&mut rng, r), &m), &random_unimodular(&mut rng, c));
        ensure(smith_normal_form(&moved) == s, format!("matrix {t}: not invariant under unimodular change"))?;
    }
    Ok("500 matrices".into())
}

fn criterion_9() -> Check {
    let mut parts = Vec::new();
    for (name, suite) in [("a", suite_a as fn() -> Check), ("b", suite_b), ("c", suite_c), ("d", suite_d)] {
        let start = Instant::now();
        let detail = suite().map_err(|e| format!("({name}) {e}"))?;
        parts.push(format!("({name}) {detail} in {:.1?}", start.elapsed()));
    }
    Ok(parts.join("; "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(1)),
        (3, criterion_3, Duration::from_secs(1)),
        (4, criterion_4, Duration::from_secs(5)),
        (5, criterion_5, Duration::from_secs(10)),
        (6, criterion_6, Duration::from_secs(20 * 60)),
        (7, criterion_7, Duration::from_secs(15 * 60)),
        (8, criterion_8, Duration::from_secs(60)),
        (9, criterion_9, Duration::from_secs(10 * 60)),
    ];
    let mut failed = 0;
    for (n, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; exceeded {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {n}: PASS [{elapsed:.2?}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL [{elapsed:.2?}] {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
