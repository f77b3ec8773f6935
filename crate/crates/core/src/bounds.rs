//! Closed-form lower bounds, the parity filter, the minimum over the
//! construction upper bounds, and the table aggregator.
//!
//! The lower-bound machinery has two formulas: the general tree bound for a
//! subgraph containing a degree-k check, and its specialization to
//! non-elementary codewords (b = 0). The parity filter removes classes that
//! cannot exist in a variable-regular graph and bumps lower bounds to the
//! next admissible size.

use thiserror::Error;

use crate::cages::{CageRegistry, GoodGraphSize};
use crate::tanner::Category;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("bad precondition: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
    Exact,
}

/// A bound value with its provenance rule; `None` means not derivable
/// (unknown cage size or inapplicable precondition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: Option<u64>,
    pub direction: Direction,
    pub provenance: String,
    pub parity_adjusted: bool,
}

impl Bound {
    fn new(value: Option<u64>, direction: Direction, provenance: &str) -> Bound {
        Bound { value, direction, provenance: provenance.to_string(), parity_adjusted: false }
    }
}

/// `sum_{i=0}^{top} base^i`; empty (0) when `top` is negative.
fn geom_sum(base: u64, top: i64) -> u64 {
    if top < 0 {
        return 0;
    }
    (0..=top as u32).map(|i| base.pow(i)).sum()
}

fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Tree lower bound on the size of a trapping set whose subgraph contains a
/// check of degree k: counts the variables reachable within half the girth
/// from that check. Raw formula, no parity adjustment.
pub fn eq1_lower(dv: u64, g: u64, b: u64, k: u64) -> Bound {
    if b >= k * (dv - 1) + (k % 2) {
        return Bound::new(
            None,
            Direction::Lower,
            &format!("eq1 inapplicable: b = {b} >= k(dv-1) + (k mod 2) = {}", k * (dv - 1) + k % 2),
        );
    }
    let b_prime = b - (k % 2);
    let t = k * (dv - 1) - b_prime;
    let q = (g / 4) as i64; // floor(g/4)
    let mut a = k + t * geom_sum(dv - 1, q - 2);
    if (g / 2) % 2 == 1 {
        let pow = (dv - 1).pow((q - 1) as u32);
        a += std::cmp::max(div_ceil(t * pow, dv), (dv - 1 - b_prime / k) * pow);
    }
    Bound::new(Some(a), Direction::Lower, "eq1")
}

/// Specialized lower bound for non-elementary codewords (b = 0): the
/// degree-4-check case of the tree bound. Raw, no parity adjustment.
pub fn eq2_lne(dv: u64, g: u64) -> Bound {
    let q = (g / 4) as i64;
    let mut a = 4 * geom_sum(dv - 1, q - 1);
    if (g / 2) % 2 == 1 {
        let pow = (dv - 1).pow(q as u32);
        a += std::cmp::max(div_ceil(4 * pow, dv), pow);
    }
    Bound::new(Some(a), Direction::Lower, "eq2")
}

/// Parity filter: an (a,b) class with dv-regular variables exists only when
/// dv*a and b have equal parity.
pub fn class_exists(dv: u64, a: u64, b: u64) -> bool {
    !((dv % 2 == 1 && (a + b) % 2 == 1) || (dv % 2 == 0 && b % 2 == 1))
}

/// Smallest admissible size at or above `lower`; `None` when no size is
/// admissible (even dv with odd b).
pub fn parity_correct(dv: u64, b: u64, lower: u64) -> Option<u64> {
    if dv % 2 == 0 && b % 2 == 1 {
        return None;
    }
    (lower..).find(|&a| class_exists(dv, a, b))
}

/// Parity-corrected tree lower bound.
fn eq1_parity(dv: u64, g: u64, b: u64, k: u64) -> Bound {
    let raw = eq1_lower(dv, g, b, k);
    match raw.value {
        None => raw,
        Some(v) => {
            let corrected = parity_correct(dv, b, v);
            Bound {
                parity_adjusted: corrected != Some(v),
                value: corrected,
                ..raw
            }
        }
    }
}

/// Improved lower bound on the smallest leafy class with b = dv-1 (odd dv):
/// one more than the parity-corrected b = 1 leafless lower bound.
pub fn etsl_improved_lower(dv: u64, g: u64) -> Result<Bound, BoundsError> {
    if dv % 2 == 0 {
        return Err(BoundsError::Precondition(format!("variable degree {dv} must be odd")));
    }
    let inner = eq1_parity(dv, g, 1, 2);
    Ok(Bound {
        value: inner.value.map(|v| v + 1),
        direction: Direction::Lower,
        provenance: "eq1+parity+1".to_string(),
        parity_adjusted: inner.parity_adjusted,
    })
}

fn opt_add(n: Option<u64>, d: i64) -> Option<u64> {
    n.map(|v| (v as i64 + d) as u64)
}

fn good_size(reg: &CageRegistry, r: usize, s: usize, g: usize) -> Option<u64> {
    match reg.good_graph_record(r, s, g).n {
        GoodGraphSize::Known(n) => Some(n),
        _ => None,
    }
}

/// All construction rules applicable to (category, dv, g, b), evaluated on
/// table sizes only (no witness is materialized).
fn upper_candidates(
    reg: &CageRegistry,
    category: Category,
    dv: usize,
    g: usize,
    b: usize,
) -> Vec<(Option<u64>, String)> {
    let n = |gg: usize| reg.cage_size(dv, gg / 2);
    let mut out: Vec<(Option<u64>, String)> = Vec::new();
    let mut push = |v: Option<u64>, name: &str| out.push((v, name.to_string()));
    match category {
        Category::Lets => {
            if b == 0 {
                push(n(g), "thm2-i-a");
            }
            if b == dv - 2 && b >= 1 {
                push(opt_add(n(g), 1), "thm2-i-b");
            }
            if b == dv {
                push(opt_add(n(g), -1), "thm2-i-c");
            }
            if b >= 2 && b % 2 == 0 && b < dv + 2 {
                push(n(g), "thm2-i-d");
            }
            if b == 2 * (dv - 1) && g >= 8 {
                push(opt_add(n(g), -2), "thm2-ii");
            }
            if b == dv + 2 && (dv >= 4 || g >= 10) {
                push(opt_add(n(g), -1), "thm2-iii");
            }
            if dv == 3 && b >= 3 && g <= 2 * b {
                push(Some(b as u64), "cycle-pendant");
            }
            if dv == 5 && b == 1 {
                push(good_size(reg, 5, 6, g / 2), "fact1");
            }
        }
        Category::Etsl => {
            // composition: a leafless class with b - (dv-2) plus one leaf variable
            if b + 2 >= dv && b - (dv - 2) >= 1 {
                let inner = best_upper(reg, Category::Lets, dv, g, b - (dv - 2));
                push(opt_add(inner.value, 1), &format!("thm3-i({})", inner.provenance));
            }
            if b >= dv && (b - 2) % (dv - 2) == 0 {
                push(Some(((b - 2) / (dv - 2)) as u64), "etsl-tree");
            }
        }
        Category::Nets => {
            if b == 0 {
                push(opt_add(n(g).map(|v| 2 * v), 0), "thm4-i-a");
                push(opt_add(n(g + 4), -2), "thm4-i-b");
                if dv % 2 == 0 {
                    push(opt_add(n(g + 2), -1), "thm4-ii");
                }
                if dv == 3 {
                    let rec = reg.good_graph_record(3, 4, (g + 2) / 2);
                    if let GoodGraphSize::Known(v) = rec.n {
                        push(Some(v + rec.t as u64 - 2), "fact2");
                    }
                }
            }
            if (1..=dv.saturating_sub(2)).contains(&b) && b % 2 == dv % 2 {
                push(opt_add(n(g + 2), -1), "thm4-ii");
            }
            if b == 2 * (dv - 1) {
                push(opt_add(n(g), 2), "thm4-iii-a");
            }
            if b == dv {
                push(opt_add(n(g), 1), "thm4-iii-b");
            }
            if b == dv + 2 {
                push(opt_add(n(g), 1), "thm4-iii-c");
            }
            if b == dv - 1 && dv % 2 == 1 {
                push(n(g + 2), "thm4-iii-d");
            }
            if dv == 5 && b == 2 {
                push(n(g).map(|v| 2 * v), "fact3");
            }
        }
    }
    out
}

/// Minimum over the applicable construction rules; `None` (with an
/// explanation in provenance) when nothing applies or all sizes are unknown.
pub fn best_upper(reg: &CageRegistry, category: Category, dv: usize, g: usize, b: usize) -> Bound {
    if parity_correct(dv as u64, b as u64, 1).is_none() {
        return Bound::new(None, Direction::Upper, "class inadmissible: even dv with odd b");
    }
    let candidates = upper_candidates(reg, category, dv, g, b);
    let best = candidates
        .iter()
        .filter_map(|(v, name)| v.map(|v| (v, name.clone())))
        .min_by_key(|&(v, _)| v);
    match best {
        Some((v, name)) => {
            let direction = if category == Category::Lets && b == 0 {
                Direction::Exact
            } else {
                Direction::Upper
            };
            Bound::new(Some(v), direction, &name)
        }
        None if candidates.is_empty() => {
            Bound::new(None, Direction::Upper, "no applicable construction")
        }
        None => Bound::new(None, Direction::Upper, "required graph sizes unknown"),
    }
}

/// One table row for a fixed (category, dv, b) at girth g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub g: usize,
    pub lower: Option<u64>,
    pub improved_lower: Option<u64>,
    pub upper: Option<u64>,
    pub exact: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub category: Category,
    pub dv: usize,
    pub b: usize,
    pub rows: Vec<TableRow>,
}

/// Lower bound as printed in the published tables: the cycle constants for
/// dv = 3 with b in {4, 5}, the codeword bound for b = 0 non-elementary
/// classes, and the parity-corrected tree bound otherwise.
fn table_lower(category: Category, dv: usize, g: usize, b: usize) -> Option<u64> {
    let (dv64, g64, b64) = (dv as u64, g as u64, b as u64);
    match category {
        Category::Lets | Category::Etsl if dv == 3 && b == 4 => Some(4),
        Category::Lets | Category::Etsl if dv == 3 && b == 5 => Some(5),
        Category::Lets | Category::Etsl => eq1_parity(dv64, g64, b64, 2).value,
        Category::Nets if b == 0 => {
            let raw = eq2_lne(dv64, g64).value?;
            parity_correct(dv64, 0, raw)
        }
        Category::Nets => eq1_parity(dv64, g64, b64, 3).value,
    }
}

/// Upper bound using the same rule the published table uses for that cell,
/// including the printed per-cell values that differ from the formulas.
fn table_upper(reg: &CageRegistry, category: Category, dv: usize, g: usize, b: usize) -> Option<u64> {
    let n = reg.cage_size(dv, g / 2);
    match category {
        Category::Lets => match (dv, b) {
            (_, 0) => n,
            (3, 1) => opt_add(n, 1),
            (5, 1) => good_size(reg, 5, 6, g / 2),
            (_, 2) => n,
            (3, 3) => opt_add(n, -1),
            // printed as 42 in the source table; the formula yields 43
            (5, 3) if g == 12 => Some(42),
            (5, 3) => opt_add(n, 1),
            (3, 4) if g >= 8 => opt_add(n, -2),
            (3, 4) => None,
            (4, 4) => opt_add(n, -1),
            (_, 4) if dv >= 5 => n,
            (3, 5) if g >= 12 => opt_add(n, -1),
            (3, 5) => None,
            (5, 5) => opt_add(n, -1),
            _ => best_upper(reg, category, dv, g, b).value,
        },
        Category::Etsl => {
            // published rows compose a leafless class with one leaf variable
            if b + 2 < dv || b + 2 == dv {
                return None;
            }
            opt_add(table_upper(reg, Category::Lets, dv, g, b - (dv - 2)), 1)
        }
        Category::Nets => best_upper(reg, category, dv, g, b).value,
    }
}

/// Reproduce the published comparison rows for a (category, dv, b) class
/// across a list of girths.
pub fn table(reg: &CageRegistry, category: Category, dv: usize, b: usize, g_list: &[usize]) -> Table {
    let rows = g_list
        .iter()
        .map(|&g| {
            let lower = table_lower(category, dv, g, b);
            let improved_lower = if category == Category::Etsl && dv % 2 == 1 && b == dv - 1 {
                etsl_improved_lower(dv as u64, g as u64).ok().and_then(|bd| bd.value)
            } else {
                None
            };
            let upper = table_upper(reg, category, dv, g, b);
            let exact_lower = improved_lower.or(lower);
            let exact = match (category, b) {
                (Category::Lets, 0) => upper,
                _ if exact_lower.is_some() && exact_lower == upper => upper,
                _ => None,
            };
            TableRow { g, lower, improved_lower, upper, exact }
        })
        .collect();
    Table { category, dv, b, rows }
}

fn cell(v: Option<u64>) -> String {
    v.map_or_else(|| "--".to_string(), |x| x.to_string())
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,lower,improved_lower,upper,exact\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.g,
                cell(r.lower),
                cell(r.improved_lower),
                cell(r.upper),
                cell(r.exact)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "class b={} category {} dv={}\n{:>4} {:>8} {:>10} {:>8} {:>8}\n",
            self.b, self.category, self.dv, "g", "lower", "improved", "upper", "exact"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>4} {:>8} {:>10} {:>8} {:>8}\n",
                r.g,
                cell(r.lower),
                cell(r.improved_lower),
                cell(r.upper),
                cell(r.exact)
            ));
        }
        out
    }

    pub fn upper_row(&self) -> Vec<Option<u64>> {
        self.rows.iter().map(|r| r.upper).collect()
    }

    pub fn lower_row(&self) -> Vec<Option<u64>> {
        self.rows.iter().map(|r| r.lower).collect()
    }
}
