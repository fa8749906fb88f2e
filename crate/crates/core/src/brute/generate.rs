//! Exhaustive diagonal-by-diagonal generation of fixed diagonally convex
//! polyominoes.
//!
//! A prefix of diagonals may be disconnected: deleting the last diagonal of
//! a polyomino can leave isolated cells behind. A cell on diagonal `k` is
//! edge-adjacent only to cells on diagonals `k ± 1`, so a component that has
//! no cell on the newest diagonal can never be reached again. The search
//! keeps one component label per cell of the newest run and prunes as soon
//! as a component is left behind.

use std::collections::HashMap;

use rayon::prelude::*;

use super::shape::{noses_between, DcpShape, Run};
use crate::counts::{CountKey, CountTable, Noses};

const MAX_RUN: usize = 64;

/// Search bounds. Perimeter is never allowed to exceed `max_perimeter`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_perimeter: u32,
    pub max_diagonals: u32,
}

impl Limits {
    pub fn perimeter(max_perimeter: u32) -> Self {
        Limits {
            max_perimeter,
            max_diagonals: u32::MAX,
        }
    }
}

/// A completed polyomino as seen by a visitor. `runs` holds column ranges,
/// one per diagonal starting at diagonal 0; the first run starts at column 0.
#[derive(Debug)]
pub struct Visit<'a> {
    pub runs: &'a [(i32, i32)],
    pub perimeter: u32,
    pub noses: Noses,
}

impl Visit<'_> {
    pub fn diagonals(&self) -> u32 {
        self.runs.len() as u32
    }

    pub fn last_diag(&self) -> u32 {
        let (lo, hi) = *self.runs.last().unwrap();
        (hi - lo + 1) as u32
    }

    pub fn key(&self) -> CountKey {
        CountKey {
            perimeter: self.perimeter,
            diagonals: self.diagonals(),
            noses: self.noses,
            last_diag: self.last_diag(),
        }
    }

    pub fn to_shape(&self) -> DcpShape {
        let runs = self
            .runs
            .iter()
            .enumerate()
            .map(|(d, &(lo, hi))| Run::new(d as i32, lo, hi))
            .collect();
        DcpShape::new(runs).expect("generator emits connected shapes")
    }
}

/// Search state after placing the newest run.
#[derive(Clone, Copy)]
struct Node {
    lo: i32,
    hi: i32,
    diag: i32,
    perimeter: u32,
    components: u8,
    labels: [u8; MAX_RUN],
    col_min: i32,
    col_max: i32,
    row_min: i32,
    row_max: i32,
}

impl Node {
    fn first(len: i32) -> Self {
        let mut labels = [0u8; MAX_RUN];
        for (i, l) in labels.iter_mut().enumerate().take(len as usize) {
            *l = i as u8;
        }
        Node {
            lo: 0,
            hi: len - 1,
            diag: 0,
            perimeter: 4 * len as u32,
            components: len as u8,
            labels,
            col_min: 0,
            col_max: len - 1,
            row_min: -(len - 1),
            row_max: 0,
        }
    }

    fn label(&self, col: i32) -> Option<u8> {
        (self.lo..=self.hi)
            .contains(&col)
            .then(|| self.labels[(col - self.lo) as usize])
    }

    /// Places the run `[lo, hi]` on the next diagonal. `None` when an old
    /// component would be left without a cell on the frontier.
    fn child(&self, lo: i32, hi: i32) -> Option<Node> {
        let len = (hi - lo + 1) as usize;
        let old = self.components as usize;
        // Union-find over old labels followed by one slot per new cell.
        let mut parent = [0u8; 2 * MAX_RUN];
        for (i, p) in parent.iter_mut().enumerate().take(old + len) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut adjacent = 0u32;
        for t in 0..len {
            let col = lo + t as i32;
            let slot = (old + t) as u8;
            // Below: same column; left: column − 1.
            for n in [self.label(col), self.label(col - 1)].into_iter().flatten() {
                adjacent += 1;
                let (a, b) = (find(&mut parent, n), find(&mut parent, slot));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut roots = [0u8; MAX_RUN];
        for (t, r) in roots.iter_mut().enumerate().take(len) {
            *r = find(&mut parent, (old + t) as u8);
        }
        for l in 0..old as u8 {
            let root = find(&mut parent, l);
            if !roots[..len].contains(&root) {
                return None;
            }
        }
        let mut labels = [0u8; MAX_RUN];
        let mut seen: [u8; 2 * MAX_RUN] = [u8::MAX; 2 * MAX_RUN];
        let mut components = 0u8;
        for t in 0..len {
            let r = roots[t] as usize;
            if seen[r] == u8::MAX {
                seen[r] = components;
                components += 1;
            }
            labels[t] = seen[r];
        }
        let diag = self.diag + 1;
        Some(Node {
            lo,
            hi,
            diag,
            perimeter: self.perimeter + 4 * len as u32 - 2 * adjacent,
            components,
            labels,
            col_min: self.col_min.min(lo),
            col_max: self.col_max.max(hi),
            row_min: self.row_min.min(diag - hi),
            row_max: self.row_max.max(diag - lo),
        })
    }

    /// Calls `f` for every admissible next run within the perimeter bound.
    fn for_each_child(&self, max_perimeter: u32, mut f: impl FnMut(Node)) {
        // The new run must touch [lo, hi + 1], otherwise every old
        // component is stranded.
        let mut lo = self.hi + 1;
        loop {
            let start = lo.max(self.lo);
            let mut hi = start;
            let mut placed_any = false;
            loop {
                if (hi - lo + 1) as usize > MAX_RUN {
                    break;
                }
                let cost = self.cost_of(lo, hi);
                if cost > max_perimeter {
                    break;
                }
                placed_any = true;
                if let Some(child) = self.child(lo, hi) {
                    f(child);
                }
                hi += 1;
            }
            // Widening to the left only adds cells once lo is left of the
            // old run, so the minimal placement cannot get cheaper.
            if !placed_any && lo <= self.lo {
                break;
            }
            lo -= 1;
            if self.lo - lo > MAX_RUN as i32 {
                break;
            }
        }
    }

    fn cost_of(&self, lo: i32, hi: i32) -> u32 {
        let overlap = |a: i32, b: i32| (hi.min(b) - lo.max(a) + 1).max(0) as u32;
        let len = (hi - lo + 1) as u32;
        let adjacent = overlap(self.lo, self.hi) + overlap(self.lo + 1, self.hi + 1);
        let perimeter = self.perimeter + 4 * len - 2 * adjacent;
        let diag = self.diag + 1;
        let cols = self.col_max.max(hi) - self.col_min.min(lo) + 1;
        let rows = self.row_max.max(diag - lo) - self.row_min.min(diag - hi) + 1;
        perimeter.max(2 * (cols + rows) as u32)
    }
}

struct Search<'f, F> {
    limits: Limits,
    runs: Vec<(i32, i32)>,
    visit: &'f mut F,
}

impl<F: FnMut(&Visit)> Search<'_, F> {
    fn explore(&mut self, node: &Node) {
        if node.components == 1 {
            let noses = match self.runs.len() {
                1 => Noses::Single,
                k => noses_between(self.runs[k - 2], self.runs[k - 1]),
            };
            (self.visit)(&Visit {
                runs: &self.runs,
                perimeter: node.perimeter,
                noses,
            });
        }
        if self.runs.len() as u32 >= self.limits.max_diagonals {
            return;
        }
        let max_p = self.limits.max_perimeter;
        node.for_each_child(max_p, |child| {
            self.runs.push((child.lo, child.hi));
            self.explore(&child);
            self.runs.pop();
        });
    }
}

/// Runs placed so far, the node after the last one, and whether to descend.
type Task = (Vec<(i32, i32)>, Node, bool);

/// Roots of independent subtrees: every first run, and every second run
/// below it.
fn partition(limits: Limits) -> Vec<Task> {
    let mut tasks = Vec::new();
    let mut len = 1;
    while 4 * len as u32 <= limits.max_perimeter && len as usize <= MAX_RUN {
        let first = Node::first(len);
        // The first run alone is visited by its own task, without descending.
        tasks.push((vec![(0, len - 1)], first, false));
        if limits.max_diagonals >= 2 {
            first.for_each_child(limits.max_perimeter, |child| {
                tasks.push((vec![(0, len - 1), (child.lo, child.hi)], child, true));
            });
        }
        len += 1;
    }
    tasks
}

fn run_task<F: FnMut(&Visit)>(limits: Limits, task: &Task, f: &mut F) {
    let (runs, node, descend) = task;
    if *descend {
        let mut search = Search {
            limits,
            runs: runs.clone(),
            visit: f,
        };
        search.explore(node);
    } else if node.components == 1 {
        f(&Visit {
            runs,
            perimeter: node.perimeter,
            noses: Noses::Single,
        });
    }
}

/// Serial visit of every polyomino within `limits`, in a fixed order.
pub fn visit_shapes<F: FnMut(&Visit)>(limits: Limits, mut f: F) {
    assert!(limits.max_perimeter as usize <= 4 * MAX_RUN);
    for task in partition(limits) {
        run_task(limits, &task, &mut f);
    }
}

/// Counts every fixed diagonally convex polyomino with perimeter at most
/// `max_perimeter`, keyed by perimeter, diagonals, noses and last-diagonal
/// size. Runs on the current rayon pool.
pub fn generate(max_perimeter: u32) -> CountTable {
    generate_within(Limits::perimeter(max_perimeter))
}

pub fn generate_within(limits: Limits) -> CountTable {
    assert!(limits.max_perimeter as usize <= 4 * MAX_RUN);
    let tallies: Vec<HashMap<CountKey, u64>> = partition(limits)
        .par_iter()
        .map(|task| {
            let mut tally: HashMap<CountKey, u64> = HashMap::new();
            run_task(limits, task, &mut |v: &Visit| {
                *tally.entry(v.key()).or_default() += 1;
            });
            tally
        })
        .collect();
    let mut table = CountTable::new();
    for tally in tallies {
        for (k, v) in tally {
            table.add(k, v);
        }
    }
    table
}

/// [`generate`] on a dedicated pool of `threads` workers; `0` uses the
/// global pool.
pub fn generate_with_threads(max_perimeter: u32, threads: usize) -> CountTable {
    if threads == 0 {
        return generate(max_perimeter);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| generate(max_perimeter))
}

/// Canonical text of every generated shape, one per entry, in the same
/// deterministic order regardless of thread count.
pub fn dump_shapes(max_perimeter: u32) -> Vec<String> {
    let limits = Limits::perimeter(max_perimeter);
    partition(limits)
        .par_iter()
        .map(|task| {
            let mut lines = Vec::new();
            run_task(limits, task, &mut |v: &Visit| {
                lines.push(v.to_shape().canonical())
            });
            lines
        })
        .collect::<Vec<_>>()
        .concat()
}
