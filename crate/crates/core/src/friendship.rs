//! Side-by-side check of the friendship-graph closed forms against direct
//! computation on Δ_T(F_{5n+1}).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::cm::tsc_cm_shortcut;
use crate::cover::{friendship_cover_count, minimal_vertex_covers_with};
use crate::exec::Exec;
use crate::field::FieldSpec;
use crate::graph::friendship;
use crate::homology::homology_summary_with;
use crate::tsc::{build_tsc_with, friendship_facets_closed_form};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    /// The closed form is not claimed for this n; both values are shown.
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub name: &'static str,
    pub computed: String,
    pub expected: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriendshipRow {
    pub n: u64,
    pub cells: Vec<Cell>,
}

impl FriendshipRow {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.status != Status::Fail)
    }
}

pub fn expected_f_vector(n: u64) -> [u64; 3] {
    [5 * n + 1, 10 * n * n + 5 * n, (4 * n.pow(3) + 42 * n * n + 14 * n) / 3]
}

pub fn expected_betti(n: u64) -> [u64; 3] {
    [1, 0, (4 * n.pow(3) + 12 * n * n + 14 * n) / 3]
}

pub fn expected_ranks(n: u64) -> [u64; 2] {
    [5 * n, 10 * n * n]
}

fn cell(name: &'static str, computed: String, expected: String) -> Cell {
    let status = if computed == expected { Status::Pass } else { Status::Fail };
    Cell { name, computed, expected, status }
}

fn show<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

pub fn verify_row(n: u64, exec: Exec) -> FriendshipRow {
    let (g, l) = friendship(n as u32).expect("n >= 1");
    let tsc = build_tsc_with(&g, &l, exec).expect("friendship graph is non-empty");
    let mut cells = Vec::new();

    let alpha: Vec<u64> = tsc.f_vector().0.iter().map(|&a| a as u64).collect();
    cells.push(cell("alpha", show(&alpha), show(expected_f_vector(n).to_vec())));

    let built: BTreeSet<Vec<u32>> = tsc.facets().iter().cloned().collect();
    let closed: BTreeSet<Vec<u32>> = friendship_facets_closed_form(n as u32).iter().map(|t| t.to_vec()).collect();
    cells.push(cell("facet families", show(built == closed), show(true)));

    let mut bettis = Vec::new();
    for (name_r, name_b, field) in [
        ("ranks q", "betti q", FieldSpec::Rationals),
        ("ranks gf", "betti gf", FieldSpec::default()),
    ] {
        let h = homology_summary_with(&tsc, field, exec);
        let ranks: Vec<u64> = h.rank_im[1..].iter().map(|&r| r as u64).collect();
        cells.push(cell(name_r, show(&ranks), show(expected_ranks(n).to_vec())));
        let betti: Vec<u64> = h.betti.iter().map(|&b| b as u64).collect();
        cells.push(cell(name_b, show(&betti), show(expected_betti(n).to_vec())));
        bettis.push(betti);
    }
    cells.push(cell("field agreement", show(bettis[0] == bettis[1]), show(true)));

    let cm = tsc_cm_shortcut(&g, &l, FieldSpec::default()).expect("connected");
    cells.push(cell("cm (H1 shortcut)", show(cm), show(true)));

    let covers = minimal_vertex_covers_with(&tsc, exec);
    let size = (3 * n + 1) as usize;
    let hist = covers.size_histogram();
    cells.push(cell("cover sizes", show(&hist), show(vec![(size, covers.covers.len())])));
    let of_size = covers.cardinalities.iter().filter(|&&c| c == size).count() as u64;
    let total = covers.covers.len() as u64;
    match friendship_cover_count(n) {
        Ok(formula) => {
            cells.push(cell("covers of size 3n+1", of_size.to_string(), formula.to_string()));
            cells.push(cell("cover count", total.to_string(), formula.to_string()));
        }
        Err(_) => cells.push(Cell {
            name: "cover count",
            computed: total.to_string(),
            expected: "15 (full 2-skeleton) / 10 (formula)".to_string(),
            status: Status::Open,
        }),
    }
    FriendshipRow { n, cells }
}

pub fn verify_friendship(n_max: u64, exec: Exec) -> Vec<FriendshipRow> {
    let ns: Vec<u64> = (1..=n_max).collect();
    exec.map(&ns, |&n| verify_row(n, Exec::Sequential))
}

pub fn render_table(rows: &[FriendshipRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{:>2}  {:<20} {:<28} {:<28} status", "n", "check", "computed", "expected").unwrap();
    for row in rows {
        for c in &row.cells {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Open => "OPEN QUESTION",
            };
            writeln!(s, "{:>2}  {:<20} {:<28} {:<28} {status}", row.n, c.name, c.computed, c.expected).unwrap();
        }
    }
    s
}
