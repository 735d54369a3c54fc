//! Deterministic generators for example structures and random families of
//! independence dimension at most one.
//!
//! Every generator is a pure function of its parameters. Dense orders are
//! truncated to finite chains and grids; infinitely many predicates are
//! truncated to `k` of them.

mod rng;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{Limits, SetFamily, SubsetMask, Universe};

pub use rng::XorShiftRng;

/// Defaults for [`random_id1`] when no universe size is requested.
pub const RANDOM_ID1_MAX_POINTS: usize = 128;
pub const RANDOM_ID1_MAX_MEMBERS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredicateMode {
    Independent,
    Nested,
}

/// Parameters of one generator run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Linear {
        m: usize,
        cuts: Vec<usize>,
    },
    Grid {
        n: usize,
        m: usize,
        corners: Vec<Vec<usize>>,
    },
    Cyclic {
        m: usize,
        arcs: Vec<(usize, usize)>,
    },
    PredicatesIndependent {
        k: usize,
        m: usize,
    },
    PredicatesNested {
        k: usize,
        m: usize,
    },
    RandomId1 {
        seed: u64,
        depth: usize,
        flips: usize,
        points: Option<usize>,
        max_members: Option<usize>,
    },
    ReductOrder {
        m: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<SetFamily> {
        match self {
            GeneratorSpec::Linear { m, cuts } => gen_linear(*m, cuts),
            GeneratorSpec::Grid { n, m, corners } => gen_grid(*n, *m, corners),
            GeneratorSpec::Cyclic { m, arcs } => gen_cyclic(*m, arcs),
            GeneratorSpec::PredicatesIndependent { k, m } => gen_predicates(*k, PredicateMode::Independent, *m),
            GeneratorSpec::PredicatesNested { k, m } => gen_predicates(*k, PredicateMode::Nested, *m),
            GeneratorSpec::RandomId1 {
                seed,
                depth,
                flips,
                points,
                max_members,
            } => {
                let mut params = RandomId1::new(*seed, *depth, *flips);
                params.points = *points;
                if let Some(cap) = max_members {
                    params.max_members = *cap;
                }
                gen_random_id1(&params)
            }
            GeneratorSpec::ReductOrder { m } => gen_reduct_order(*m),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Generator(msg.into())
}

fn chain_universe(m: usize) -> Result<Universe> {
    Limits::default().check_elements(m)?;
    Universe::new((1..=m).map(|i| i.to_string()))
}

fn point_name(p: &[usize]) -> String {
    let coords: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("({})", coords.join(","))
}

/// All points of `{1..m}^n` in lexicographic order.
fn grid_points(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut points = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                (1..=m).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    points
}

/// Initial segments `{x : x < b}` of the chain `1 < 2 < ... < m`, one per
/// cut `b ∈ 1..=m+1`. Members are named `<b`.
pub fn gen_linear(m: usize, cuts: &[usize]) -> Result<SetFamily> {
    if m == 0 {
        return Err(bad("chain length must be at least 1"));
    }
    let mut family = SetFamily::new(chain_universe(m)?);
    for &b in cuts {
        if b == 0 || b > m + 1 {
            return Err(bad(format!("cut {b} outside 1..={}", m + 1)));
        }
        family.push(format!("<{b}"), SubsetMask::from_indices(m, 0..b - 1))?;
    }
    Ok(family)
}

/// Lower orthants `{x : x_i < b_i for all i}` in the grid `{1..m}^n`, the
/// finite trace of `n` independent dense orders. Points are named `(i,j,..)`
/// and members `<(b_0,b_1,..)`; corner coordinates range over `1..=m+1`.
pub fn gen_grid(n: usize, m: usize, corners: &[Vec<usize>]) -> Result<SetFamily> {
    if !(1..=3).contains(&n) {
        return Err(bad(format!("grid dimension {n} outside 1..=3")));
    }
    if m == 0 {
        return Err(bad("grid side must be at least 1"));
    }
    let size = m.checked_pow(n as u32).unwrap_or(usize::MAX);
    Limits::default().check_elements(size)?;
    let points = grid_points(n, m);
    let universe = Universe::new(points.iter().map(|p| point_name(p)))?;
    let mut family = SetFamily::new(universe);
    for corner in corners {
        if corner.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: corner.len(),
            });
        }
        if let Some(&c) = corner.iter().find(|&&c| c == 0 || c > m + 1) {
            return Err(bad(format!("corner coordinate {c} outside 1..={}", m + 1)));
        }
        let mask = SubsetMask::from_indices(
            size,
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| p.iter().zip(corner).all(|(x, b)| x < b))
                .map(|(i, _)| i),
        );
        family.push(format!("<{}", point_name(corner)), mask)?;
    }
    Ok(family)
}

/// `count` distinct corners for `gen_grid` with coordinates in `2..=m`, so
/// every orthant is a proper non-empty subset. Each axis draws from shuffled
/// passes over `2..=m`, so the first `m - 1` corners have pairwise distinct
/// coordinates on every axis. Prefixes of the sequence are the corners for
/// smaller counts.
pub fn generic_corners(n: usize, m: usize, count: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    if m < 2 {
        return Err(bad("generic corners need a grid side of at least 2"));
    }
    let available = (m - 1).checked_pow(n as u32).unwrap_or(usize::MAX);
    if count > available {
        return Err(bad(format!("only {available} distinct interior corners exist")));
    }
    let mut rng = XorShiftRng::new(seed);
    let mut passes: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut draw = |axis: usize, rng: &mut XorShiftRng| {
        if passes[axis].is_empty() {
            let mut pass: Vec<usize> = (2..=m).collect();
            rng.shuffle(&mut pass);
            passes[axis] = pass;
        }
        passes[axis].pop().expect("refilled")
    };
    let mut corners: Vec<Vec<usize>> = Vec::with_capacity(count);
    while corners.len() < count {
        let corner: Vec<usize> = (0..n).map(|axis| draw(axis, &mut rng)).collect();
        if !corners.contains(&corner) {
            corners.push(corner);
        }
    }
    Ok(corners)
}

/// Arcs of the cyclic order on `1..m`: the member for `(b, c)` is
/// `R(·, b, c)`, the points met strictly between `c` and `b` walking forward
/// from `c`. Named `R(b,c)`.
pub fn gen_cyclic(m: usize, arcs: &[(usize, usize)]) -> Result<SetFamily> {
    if m < 3 {
        return Err(bad("a cyclic order needs at least 3 points"));
    }
    let mut family = SetFamily::new(chain_universe(m)?);
    for &(b, c) in arcs {
        if b == 0 || c == 0 || b > m || c > m {
            return Err(bad(format!("arc endpoint outside 1..={m}")));
        }
        if b == c {
            return Err(bad(format!("degenerate arc ({b},{c})")));
        }
        let len = (b + m - c) % m - 1;
        let mask = SubsetMask::from_indices(m, (1..=len).map(|d| (c - 1 + d) % m));
        family.push(format!("R({b},{c})"), mask)?;
    }
    Ok(family)
}

/// Predicates on `0..m`. `P_i` holds at `x` when bit `i` of `x mod 2^k` is
/// set.
///
/// Independent mode returns `P_0, .., P_{k-1}`. Nested mode returns
/// `⋀_{i<n} P_i^{s(i)} ∧ P_n` for every `n < k` and `s ∈ 2^n`, named
/// `N<n>:<s>`, which is a tree of nested or disjoint sets for any choice of
/// predicates.
pub fn gen_predicates(k: usize, mode: PredicateMode, m: usize) -> Result<SetFamily> {
    if k >= 63 {
        return Err(bad(format!("{k} predicates is too many")));
    }
    match mode {
        PredicateMode::Independent if m < 1 << k => {
            return Err(bad(format!("independent mode needs m >= 2^{k} = {}", 1u64 << k)));
        }
        PredicateMode::Nested if m < k + 1 => {
            return Err(bad(format!("nested mode needs m >= {}", k + 1)));
        }
        _ => {}
    }
    Limits::default().check_elements(m)?;
    let universe = Universe::numbered(m);
    let period = 1usize << k;
    let holds = |i: usize, x: usize| (x % period) >> i & 1 == 1;
    let mut family = SetFamily::new(universe);
    match mode {
        PredicateMode::Independent => {
            for i in 0..k {
                family.push(
                    format!("P{i}"),
                    SubsetMask::from_indices(m, (0..m).filter(|&x| holds(i, x))),
                )?;
            }
        }
        PredicateMode::Nested => {
            Limits::default().check_members((1usize << k) - 1)?;
            for n in 0..k {
                for s in 0..1usize << n {
                    let signs: String = (0..n).map(|i| if s >> i & 1 == 1 { '1' } else { '0' }).collect();
                    let mask = SubsetMask::from_indices(
                        m,
                        (0..m).filter(|&x| (0..n).all(|i| holds(i, x) == (s >> i & 1 == 1)) && holds(n, x)),
                    );
                    family.push(format!("N{n}:{signs}"), mask)?;
                }
            }
        }
    }
    Ok(family)
}

/// Parameters of [`gen_random_id1`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomId1 {
    pub seed: u64,
    pub depth: usize,
    pub flips: usize,
    /// Universe size; drawn from `2..=128` when absent.
    pub points: Option<usize>,
    pub max_members: usize,
}

impl RandomId1 {
    pub fn new(seed: u64, depth: usize, flips: usize) -> Self {
        RandomId1 {
            seed,
            depth,
            flips,
            points: None,
            max_members: RANDOM_ID1_MAX_MEMBERS,
        }
    }
}

/// A random laminar family with some members complemented.
///
/// The ground set is shuffled and split recursively, `depth` levels deep,
/// into two or three contiguous blocks; every block is a candidate member. A
/// random selection of candidates is kept in random order and the first
/// `flips` of them are complemented.
pub fn gen_random_id1(params: &RandomId1) -> Result<SetFamily> {
    if params.depth == 0 {
        return Err(bad("depth must be at least 1"));
    }
    let mut rng = XorShiftRng::new(params.seed);
    let points = match params.points {
        Some(p) => p,
        None => rng.range(2, RANDOM_ID1_MAX_POINTS),
    };
    Limits::default().check_elements(points)?;
    let mut order: Vec<usize> = (0..points).collect();
    rng.shuffle(&mut order);

    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut frontier = vec![(0, points)];
    for _ in 0..params.depth {
        let mut next = Vec::new();
        for (lo, hi) in frontier {
            let len = hi - lo;
            if len < 2 {
                continue;
            }
            let parts = if len >= 3 && rng.coin() { 3 } else { 2 };
            let mut cuts: Vec<usize> = Vec::new();
            while cuts.len() < parts - 1 {
                let c = rng.range(lo + 1, hi - 1);
                if !cuts.contains(&c) {
                    cuts.push(c);
                }
            }
            cuts.sort_unstable();
            let mut start = lo;
            for end in cuts.into_iter().chain(std::iter::once(hi)) {
                blocks.push((start, end));
                next.push((start, end));
                start = end;
            }
        }
        frontier = next;
    }

    rng.shuffle(&mut blocks);
    let cap = params.max_members.min(crate::sets::MAX_MEMBERS_HARD);
    let keep = if blocks.is_empty() {
        0
    } else {
        rng.range(1, blocks.len().min(cap))
    };
    blocks.truncate(keep);

    let mut family = SetFamily::new(Universe::numbered(points));
    for (j, &(lo, hi)) in blocks.iter().enumerate() {
        family.push(
            format!("L{j}"),
            SubsetMask::from_indices(points, order[lo..hi].iter().copied()),
        )?;
    }
    for j in 0..params.flips.min(family.len()) {
        family.complement_member(j);
    }
    Ok(family)
}

/// For every point `p` of the `m × m` grid, the strict-dominance lower set
/// `{x : x_0 < p_0 ∧ x_1 < p_1}`, named `<(p_0,p_1)` as in [`gen_grid`].
pub fn gen_reduct_order(m: usize) -> Result<SetFamily> {
    if m < 2 {
        return Err(bad("reduct grid side must be at least 2"));
    }
    Limits::default().check_members(m.saturating_mul(m))?;
    let corners = grid_points(2, m);
    gen_grid(2, m, &corners)
}
