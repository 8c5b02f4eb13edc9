//! Cross-check suites: every closed form against an independent oracle.
//!
//! Each suite returns a per-case report; informational cases never count as
//! failures.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bijection::{pair_to_straight, shifted_to_tableau, straight_to_pair, tableau_to_shifted};
use crate::closed::{
    corner_ratio_check, count_rect_minus_almost_square, count_rect_minus_almost_square_factorial,
    count_rect_minus_almost_square_gf, count_rect_minus_almost_square_limit, count_rect_minus_staircase,
    count_rect_minus_staircase_binomial, count_rect_minus_staircase_limit, count_staircase_minus_box,
    count_staircase_minus_box_limit, f_straight, fixed_diagonal_gf, fixed_diagonal_oracle, fixed_diagonal_report,
    g_shifted, g_staircase, gf_rect_minus_almost_square, gf_rect_minus_staircase, gf_rect_minus_staircase_rational,
    gf_staircase_minus_box, Comparison, WeightShift,
};
use crate::error::{Error, Result};
use crate::exact::{count_from_gf, limit_at_one, Int, QRationalFn, QSeries, Rat};
use crate::oracle::{count_syt_oracle, plane_partitions, pp_series_oracle, Filling};
use crate::shape::{partitions_of, Kind, Partition, TruncatedShape};
use crate::symfunc::{
    king_rational, king_restricted_sum, restricted_schur_limit, restricted_schur_sum, rsk, rsk_inverse,
    schensted_stats, schur_eval, IntMatrix, QPowerSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    StaircaseBox,
    RectStaircase,
    RectAlmostSquare,
    Bijection,
    Rsk,
    Hooks,
    Series,
    RestrictedLimit,
    Boxed,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::StaircaseBox,
        Suite::RectStaircase,
        Suite::RectAlmostSquare,
        Suite::Bijection,
        Suite::Rsk,
        Suite::Hooks,
        Suite::Series,
        Suite::RestrictedLimit,
        Suite::Boxed,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::StaircaseBox => "thm1",
            Suite::RectStaircase => "thm2",
            Suite::RectAlmostSquare => "thm3",
            Suite::Bijection => "phi",
            Suite::Rsk => "rsk",
            Suite::Hooks => "hooks",
            Suite::Series => "gf",
            Suite::RestrictedLimit => "lemma7",
            Suite::Boxed => "section9",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Case {
    fn check(name: String, ok: bool, detail: String) -> Self {
        Case { name, status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    fn info(name: String, detail: String) -> Self {
        Case { name, status: Status::Info, detail }
    }

    fn error(name: String, e: &Error) -> Self {
        Case { name, status: Status::Fail, detail: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Size limits for the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for shifted `δ_n ∖ δ_1`.
    pub max_n: usize,
    /// Cell budget for the rectangle families.
    pub max_cells: usize,
    /// Series order for generating-function checks.
    pub order: usize,
    /// Largest entry in exhaustive plane-partition sweeps.
    pub max_entry: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 5, max_cells: 18, order: 12, max_entry: 3 }
    }
}

/// Oracle budget: suites set their own cell limits, so only guard runaway
/// requests here.
const ORACLE_BUDGET: usize = 40;

/// Largest row count for the determinant route in the staircase suite.
const KING_MAX_ROWS: usize = 8;

pub fn run(suite: Suite, limits: &Limits) -> Report {
    let cases = match suite {
        Suite::StaircaseBox => staircase_box(limits),
        Suite::RectStaircase => rect_staircase(limits),
        Suite::RectAlmostSquare => rect_almost_square(limits),
        Suite::Bijection => bijection(limits),
        Suite::Rsk => rsk_suite(),
        Suite::Hooks => hooks(),
        Suite::Series => series(limits),
        Suite::RestrictedLimit => restricted_limit(),
        Suite::Boxed => boxed(limits),
    };
    Report { suite, cases }
}

fn agree(name: String, oracle: &Result<Int>, routes: &[(&str, Result<Int>)]) -> Case {
    let want = match oracle {
        Ok(v) => v,
        Err(e) => return Case::error(name, e),
    };
    let mut detail = format!("oracle {want}");
    let mut ok = true;
    for (label, got) in routes {
        match got {
            Ok(v) => {
                detail.push_str(&format!(", {label} {v}"));
                ok &= v == want;
            }
            Err(e) => {
                detail.push_str(&format!(", {label} error: {e}"));
                ok = false;
            }
        }
    }
    Case::check(name, ok, detail)
}

fn staircase_box(limits: &Limits) -> Vec<Case> {
    (2..=limits.max_n.max(2))
        .map(|n| {
            let shape = TruncatedShape::shifted_staircase(n, 1).expect("valid staircase");
            let oracle = count_syt_oracle(&shape, ORACLE_BUDGET);
            let mut routes = vec![("formula", count_staircase_minus_box(n))];
            if n >= 3 {
                routes.push(("limit", count_staircase_minus_box_limit(n)));
            }
            agree(format!("delta({n})\\delta(1)"), &oracle, &routes)
        })
        .collect()
}

/// `(n, m, k)` with `k+1 <= n <= m` and at most `max_cells` cells.
pub fn rect_staircase_cases(max_cells: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_cells {
        for m in n..=max_cells {
            for k in 0..n {
                if m * n - k * (k + 1) / 2 <= max_cells {
                    out.push((n, m, k));
                }
            }
        }
    }
    out
}

fn rect_staircase(limits: &Limits) -> Vec<Case> {
    rect_staircase_cases(limits.max_cells)
        .into_iter()
        .map(|(n, m, k)| {
            let shape = TruncatedShape::rect_minus_staircase(m, n, k).expect("valid shape");
            let oracle = count_syt_oracle(&shape, ORACLE_BUDGET);
            let mut routes = vec![
                ("formula", count_rect_minus_staircase(n, m, k)),
                ("binomial", count_rect_minus_staircase_binomial(n, m, k)),
                ("limit", count_rect_minus_staircase_limit(n, m, k)),
            ];
            if m <= KING_MAX_ROWS {
                let cells = m * n - k * (k + 1) / 2;
                routes.push(("rational", gf_rect_minus_staircase_rational(n, m, k).and_then(|f| count_from_gf(&f, cells))));
            }
            agree(format!("rect({m},{n})\\delta({k})"), &oracle, &routes)
        })
        .collect()
}

/// `(n, m, k)` with `k >= 1`, `2k <= n+1`, `n <= m`, at most `max_cells` cells.
pub fn rect_almost_square_cases(max_cells: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_cells {
        for m in n..=max_cells {
            for k in 1..=n.div_ceil(2) {
                if m * n + 1 - k * k <= max_cells {
                    out.push((n, m, k));
                }
            }
        }
    }
    out
}

fn rect_almost_square(limits: &Limits) -> Vec<Case> {
    let mut cases = Vec::new();
    for (n, m, k) in rect_almost_square_cases(limits.max_cells) {
        let shape = TruncatedShape::rect_minus_almost_square(m, n, k).expect("valid shape");
        let oracle = count_syt_oracle(&shape, ORACLE_BUDGET);
        let mut routes = vec![
            ("formula", count_rect_minus_almost_square(n, m, k)),
            ("factorial", count_rect_minus_almost_square_factorial(n, m, k)),
            ("limit", count_rect_minus_almost_square_limit(n, m, k, WeightShift::Full)),
            ("rational", count_rect_minus_almost_square_gf(n, m, k, WeightShift::Full)),
        ];
        if k == 1 {
            routes.push(("hook", Ok(f_straight(&Partition::rectangle(m, n)))));
        }
        cases.push(agree(format!("rect({m},{n})\\almostsq({k})"), &oracle, &routes));
        if let Ok(want) = &oracle {
            let reduced = count_rect_minus_almost_square_limit(n, m, k, WeightShift::Reduced);
            let verdict = match reduced {
                Ok(v) if &v == want => "agrees".to_string(),
                Ok(v) => format!("gives {v}"),
                Err(e) => format!("fails: {e}"),
            };
            cases.push(Case::info(
                format!("rect({m},{n})\\almostsq({k}) shift {}", WeightShift::Reduced.name()),
                verdict,
            ));
        }
    }
    cases
}

fn staircase_pp_case(n: usize, max_entry: u64) -> Case {
    let name = format!("delta({n})\\delta(1) entries<={max_entry}");
    let shape = TruncatedShape::shifted_staircase(n, 1).expect("valid staircase");
    let fillings = plane_partitions(&shape, max_entry);
    let total = fillings.len();
    let mut bad = Vec::new();
    for t in &fillings {
        let ok = shifted_to_tableau(t).and_then(|p| {
            let weight = p.sum() + p.inner.size() as u64 * (n as u64 - 1);
            let back = tableau_to_shifted(&p, n, 1)?;
            Ok(weight == t.sum() && back == *t && p.is_reverse_semistandard())
        });
        if !matches!(ok, Ok(true)) {
            bad.push(format!("{:?}: {}", t.rows(), ok.map_or_else(|e| e.to_string(), |_| "mismatch".into())));
        }
    }
    let detail = match bad.first() {
        None => format!("{total} plane partitions"),
        Some(first) => format!("{} of {total} fail, first {first}", bad.len()),
    };
    Case::check(name, bad.is_empty(), detail)
}

fn rect_pp_case(n: usize, m: usize, k: usize, max_entry: u64) -> Case {
    let name = format!("rect({m},{n})\\delta({k}) entries<={max_entry}");
    let shape = TruncatedShape::rect_minus_staircase(m, n, k).expect("valid shape");
    let fillings = plane_partitions(&shape, max_entry);
    let total = fillings.len();
    let mut bad = 0usize;
    let mut first = None;
    for t in &fillings {
        let ok = straight_to_pair(t).and_then(|(p, q)| {
            let weight = p.sum() as i64 + q.sum() as i64 - p.outer.size() as i64 + (p.inner.size() * (n - k)) as i64;
            let back = pair_to_straight(&p, &q, n, m, k)?;
            Ok(weight == t.sum() as i64 && back == *t && p.outer == q.outer)
        });
        if !matches!(ok, Ok(true)) {
            bad += 1;
            first.get_or_insert_with(|| format!("{:?}", t.rows()));
        }
    }
    let detail = match first {
        None => format!("{total} plane partitions"),
        Some(f) => format!("{bad} of {total} fail, first {f}"),
    };
    Case::check(name, bad == 0, detail)
}

fn rows(r: &[&[u64]]) -> Vec<Vec<u64>> {
    r.iter().map(|x| x.to_vec()).collect()
}

/// The two worked examples: shifted `δ_5 ∖ δ_1` and `5^6 ∖ δ_2`.
pub fn worked_examples() -> Vec<Case> {
    let mut out = Vec::new();
    let shape = TruncatedShape::shifted_staircase(5, 1).expect("valid staircase");
    let t = Filling::new(shape, rows(&[&[8, 7, 6, 5], &[7, 5, 4, 3], &[5, 3, 2], &[3, 1], &[1]]));
    let res = t.and_then(|t| {
        let p = shifted_to_tableau(&t)?;
        let expect = rows(&[&[3, 2, 1], &[3, 2, 1, 1], &[3, 3, 2, 1, 1], &[2, 1, 1], &[1]]);
        Ok(p.rows == expect
            && p.outer.parts() == [8, 7, 5, 3, 1]
            && p.inner.parts() == [5, 3]
            && t.sum() == 60
            && p.sum() + 4 * p.inner.size() as u64 == 60
            && tableau_to_shifted(&p, 5, 1)? == t)
    });
    out.push(match res {
        Ok(ok) => Case::check("staircase example".into(), ok, "sum 60 = 28 + 4*8".into()),
        Err(e) => Case::error("staircase example".into(), &e),
    });
    let shape = TruncatedShape::rect_minus_staircase(6, 5, 2).expect("valid shape");
    let t = Filling::new(
        shape,
        rows(&[&[7, 6, 4], &[6, 6, 4, 4], &[4, 4, 3, 3, 2], &[4, 3, 2, 2, 2], &[3, 2, 2, 1, 1], &[2, 1, 1, 1, 1]]),
    );
    let res = t.and_then(|t| {
        let (p, q) = straight_to_pair(&t)?;
        let ep = rows(&[&[2, 2, 1], &[1, 1], &[2], &[2, 2], &[1]]);
        let eq = rows(&[&[6, 6, 5, 4, 2, 2, 1], &[5, 4, 3, 2, 1, 1], &[4, 3, 1], &[3, 1], &[2]]);
        let weight = p.sum() as i64 + q.sum() as i64 - p.outer.size() as i64 + 3 * p.inner.size() as i64;
        Ok(p.rows == ep
            && q.rows == eq
            && p.outer.parts() == [7, 6, 3, 2, 1]
            && p.inner.parts() == [4, 4, 2]
            && weight == t.sum() as i64
            && pair_to_straight(&p, &q, 5, 6, 2)? == t)
    });
    out.push(match res {
        Ok(ok) => Case::check("rectangle example".into(), ok, "P, Q and weight reproduced".into()),
        Err(e) => Case::error("rectangle example".into(), &e),
    });
    out
}

fn bijection(limits: &Limits) -> Vec<Case> {
    let mut cases = worked_examples();
    for n in 2..=4 {
        cases.push(staircase_pp_case(n, limits.max_entry));
    }
    for n in 1..=9 {
        for m in n..=9 {
            if n * m > 9 {
                continue;
            }
            for k in 0..n {
                cases.push(rect_pp_case(n, m, k, limits.max_entry));
            }
        }
    }
    cases
}

/// All `rows × cols` matrices with entries `0..=max`.
pub fn all_matrices(rows: usize, cols: usize, max: u64) -> Vec<IntMatrix> {
    let cells = rows * cols;
    let mut out = Vec::new();
    let mut digits = vec![0u64; cells];
    loop {
        let m: Vec<Vec<u64>> = digits.chunks(cols).map(<[u64]>::to_vec).collect();
        out.push(IntMatrix::new(m).expect("rectangular"));
        let Some(i) = digits.iter().position(|&d| d < max) else {
            return out;
        };
        digits[..i].fill(0);
        digits[i] += 1;
    }
}

fn rsk_suite() -> Vec<Case> {
    let mut cases = Vec::new();
    let a = IntMatrix::new(vec![vec![1, 0, 2], vec![0, 2, 0], vec![1, 1, 0]]).expect("rectangular");
    let (p, q) = rsk(&a);
    let ok = p.rows == rows(&[&[1, 1, 2, 2], &[2, 3], &[3]]) && q.rows == rows(&[&[1, 1, 1, 3], &[2, 2], &[3]]);
    cases.push(Case::check("worked example".into(), ok, format!("P={:?} Q={:?}", p.rows, q.rows)));

    let all = all_matrices(3, 3, 2);
    let total = all.len();
    let (mut roundtrip, mut stats, mut symmetric, mut sym_total) = (0usize, 0usize, 0usize, 0usize);
    for a in &all {
        let (p, q) = rsk(a);
        let shape = p.shape();
        if p.is_semistandard()
            && q.is_semistandard()
            && shape == q.shape()
            && p.content(3) == a.col_sums()
            && q.content(3) == a.row_sums()
            && rsk_inverse(&p, &q, 3, 3).as_ref() == Ok(a)
        {
            roundtrip += 1;
        }
        if schensted_stats(a) == (shape.get(0), shape.len()) {
            stats += 1;
        }
        if a.is_symmetric() {
            sym_total += 1;
            if p == q {
                symmetric += 1;
            }
        }
    }
    cases.push(Case::check("roundtrip 3x3 entries<=2".into(), roundtrip == total, format!("{roundtrip}/{total}")));
    cases.push(Case::check("schensted statistics".into(), stats == total, format!("{stats}/{total}")));
    cases.push(Case::check("symmetric gives P = Q".into(), symmetric == sym_total, format!("{symmetric}/{sym_total}")));
    cases
}

fn hooks() -> Vec<Case> {
    let mut cases = Vec::new();
    let (mut ok, mut total, mut first) = (0usize, 0usize, None);
    for size in 0..=8 {
        for lam in partitions_of(size, size, size) {
            total += 1;
            let oracle = count_syt_oracle(&TruncatedShape::straight(lam.clone()), ORACLE_BUDGET);
            if oracle.as_ref() == Ok(&f_straight(&lam)) {
                ok += 1;
            } else {
                first.get_or_insert(lam);
            }
        }
    }
    cases.push(Case::check("straight |λ|<=8".into(), ok == total, summary(ok, total, first)));
    let (mut ok, mut total, mut first) = (0usize, 0usize, None);
    for size in 0..=10 {
        for lam in partitions_of(size, size, size).into_iter().filter(Partition::is_strict) {
            total += 1;
            let shape = TruncatedShape::new(lam.clone(), Partition::empty(), Kind::Shifted);
            let oracle = shape.and_then(|s| count_syt_oracle(&s, ORACLE_BUDGET));
            match (oracle, g_shifted(&lam)) {
                (Ok(a), Ok(b)) if a == b => ok += 1,
                _ => {
                    first.get_or_insert(lam);
                }
            }
        }
    }
    cases.push(Case::check("shifted strict |λ|<=10".into(), ok == total, summary(ok, total, first)));
    for n in 0..=6 {
        let a = g_staircase(n);
        let b = g_shifted(&Partition::staircase(n));
        cases.push(Case::check(format!("staircase {n}"), b.as_ref() == Ok(&a), format!("{a}")));
    }
    cases
}

fn summary(ok: usize, total: usize, first: Option<Partition>) -> String {
    match first {
        None => format!("{ok}/{total}"),
        Some(l) => format!("{ok}/{total}, first mismatch {l}"),
    }
}

fn series_case(name: String, closed: Result<QSeries>, shape: Result<TruncatedShape>, order: usize) -> Case {
    let oracle = shape.and_then(|s| pp_series_oracle(&s, order));
    match (closed, oracle) {
        (Ok(a), Ok(b)) => {
            let ok = a == b;
            let detail = if ok { format!("{order} terms agree") } else { format!("closed {a} vs oracle {b}") };
            Case::check(name, ok, detail)
        }
        (Err(e), _) | (_, Err(e)) => Case::error(name, &e),
    }
}

fn series(limits: &Limits) -> Vec<Case> {
    let order = limits.order;
    let mut cases = Vec::new();
    for n in [3, 4] {
        cases.push(series_case(
            format!("delta({n})\\delta(1)"),
            gf_staircase_minus_box(n, order),
            TruncatedShape::shifted_staircase(n, 1),
            order,
        ));
    }
    for (n, m, k) in [(2, 2, 1), (3, 3, 1), (2, 3, 1)] {
        cases.push(series_case(
            format!("rect({m},{n})\\delta({k})"),
            gf_rect_minus_staircase(n, m, k, order),
            TruncatedShape::rect_minus_staircase(m, n, k),
            order,
        ));
    }
    for (n, m, k) in [(3, 3, 2), (4, 4, 2)] {
        let name = format!("rect({m},{n})\\almostsq({k})");
        let shape = TruncatedShape::rect_minus_almost_square(m, n, k);
        cases.push(series_case(
            name.clone(),
            gf_rect_minus_almost_square(n, m, k, WeightShift::Full, order),
            shape.clone(),
            order,
        ));
        let oracle = shape.and_then(|s| pp_series_oracle(&s, order));
        let mut passing = Vec::new();
        for shift in [WeightShift::Full, WeightShift::Reduced] {
            if let (Ok(o), Ok(c)) = (&oracle, gf_rect_minus_almost_square(n, m, k, shift, order)) {
                if *o == c {
                    passing.push(shift.name());
                }
            }
        }
        let detail = if passing.is_empty() { "no exponent matches".to_string() } else { passing.join(", ") };
        cases.push(Case::info(format!("{name} exponent"), detail));
    }
    cases
}

/// Sample points and pinned upper bounds for the leading-coefficient drift
/// of `(1-q)^N Σ_{l(λ)<=r} s_λ`: coefficient `j` of the sum divided by
/// `L C(j+N-1, N-1)` must fall strictly at each sample and end below the
/// bound.
pub const DRIFT_SAMPLES: [usize; 6] = [10, 20, 30, 40, 50, 60];
pub const DRIFT_CASES: [(usize, usize, usize, f64); 2] = [(2, 3, 0, 1.30), (2, 3, 1, 1.55)];

/// The normalized coefficients at [`DRIFT_SAMPLES`].
pub fn drift_ratios(r: usize, p: usize, s: usize) -> Result<Vec<f64>> {
    let order = *DRIFT_SAMPLES.last().expect("nonempty");
    let sum = restricted_schur_sum(r, p, s, order);
    let n = r * p - r * (r - 1) / 2;
    let lim = restricted_schur_limit(r, p, s)?;
    Ok(DRIFT_SAMPLES
        .iter()
        .map(|&j| {
            let scale = Rat::from_integer(crate::exact::binomial(j + n - 1, n - 1)) * &lim;
            ratio_f64(&(Rat::from_integer(sum.coeff(j).clone()) / scale))
        })
        .collect())
}

fn ratio_f64(r: &Rat) -> f64 {
    // quotient and remainder to six places; enough for a drift check
    let scaled = (r * Rat::from_integer(Int::from(1_000_000))).to_integer();
    let v: i64 = scaled.try_into().unwrap_or(i64::MAX);
    v as f64 / 1e6
}

fn cauchy_rational(p: usize, s: usize) -> QRationalFn {
    let mut f = QRationalFn::one();
    for i in 1..=p {
        f = f.with_factor(i + s, 1);
        for j in i + 1..=p {
            f = f.with_factor(i + j + 2 * s, 1);
        }
    }
    f
}

fn restricted_limit() -> Vec<Case> {
    let mut cases = Vec::new();
    for p in 1..=3 {
        for s in 0..=2 {
            let want = limit_at_one(&cauchy_rational(p, s), p * (p + 1) / 2);
            let got = restricted_schur_limit(p, p, s);
            let name = format!("r=p={p} s={s} against product");
            cases.push(match (got, want) {
                (Ok(a), Ok(b)) => Case::check(name, a == b, format!("{a}")),
                (Err(e), _) | (_, Err(e)) => Case::error(name, &e),
            });
        }
    }
    for p in 1..=4 {
        for r in 1..=p {
            for s in 0..=2 {
                let n = r * p - r * (r - 1) / 2;
                let name = format!("r={r} p={p} s={s} against determinant");
                let exact = king_rational(r, &QPowerSpec::principal(1 + s, p)).and_then(|f| {
                    let series_ok = f.expand(12)? == restricted_schur_sum(r, p, s, 12);
                    Ok((limit_at_one(&f, n)?, series_ok))
                });
                cases.push(match (exact, restricted_schur_limit(r, p, s)) {
                    (Ok((a, series_ok)), Ok(b)) => Case::check(
                        name,
                        series_ok && a == b,
                        format!("limit {b}, determinant {a}, series {}", if series_ok { "agree" } else { "differ" }),
                    ),
                    (Err(e), _) | (_, Err(e)) => Case::error(name, &e),
                });
            }
        }
    }
    for (r, p, s, bound) in DRIFT_CASES {
        let name = format!("drift r={r} p={p} s={s}");
        cases.push(match drift_ratios(r, p, s) {
            Ok(v) => {
                let falling = v.windows(2).all(|w| w[1] < w[0]);
                let last = *v.last().expect("nonempty");
                Case::check(name, falling && last >= 1.0 && last <= bound, format!("{v:?}, bound {bound}"))
            }
            Err(e) => Case::error(name, &e),
        });
    }
    cases
}

fn boxed(limits: &Limits) -> Vec<Case> {
    let mut cases = Vec::new();
    let order = 10;
    for mmax in 1..=2 {
        for p in 1..=3 {
            for start in 1..=2 {
                let spec = QPowerSpec::principal(start, p);
                let mut direct = QSeries::zero(order);
                for size in 0..=order {
                    for lam in partitions_of(size, mmax, size) {
                        direct = direct.add(&schur_eval(&lam, &spec).to_series(order));
                    }
                }
                let name = format!("determinant mmax={mmax} p={p} from q^{start}");
                cases.push(match king_restricted_sum(mmax, &spec, order) {
                    Ok(s) => Case::check(name, s == direct, format!("{order} terms")),
                    Err(e) => Case::error(name, &e),
                });
            }
        }
    }
    for b in 0..=2 {
        let mu = Partition::new([b]).expect("one part");
        let name = format!("fixed diagonal n=2 k=1 mu=({b})");
        let got = fixed_diagonal_gf(2, 1, &mu, order).and_then(|a| Ok((a, fixed_diagonal_oracle(2, 1, &mu, order)?)));
        cases.push(match got {
            Ok((a, o)) => Case::check(name, a == o, format!("{a}")),
            Err(e) => Case::error(name, &e),
        });
    }
    for (n, k, mu) in [(2, 1, vec![1]), (3, 2, vec![2, 1]), (3, 1, vec![2])] {
        let mu = Partition::new(mu).expect("partition");
        match fixed_diagonal_report(n, k, &mu, order) {
            Ok(reports) => {
                for r in reports {
                    cases.push(Case::info(format!("fixed diagonal n={n} k={k} mu={mu} {}", r.label), comparison(&r.outcome)));
                }
            }
            Err(e) => cases.push(Case::info(format!("fixed diagonal n={n} k={k} mu={mu}"), e.to_string())),
        }
    }
    for n in 1..=2 {
        for b in 0..=2 {
            let name = format!("corner ratio n={n} b={b}");
            cases.push(match corner_ratio_check(n, b, limits.order.min(10)) {
                Ok(r) => Case::info(name, comparison(&r.outcome)),
                Err(e) => Case::info(name, e.to_string()),
            });
        }
    }
    cases
}

fn comparison(c: &Comparison) -> String {
    match c {
        Comparison::Match => "match".into(),
        Comparison::MonomialFactor(a) => format!("computed = q^{a} * claimed"),
        Comparison::InverseMonomialFactor(a) => format!("claimed = q^{a} * computed"),
        Comparison::Mismatch => "mismatch".into(),
        Comparison::NotASeries => "claimed form is not a power series".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm4".parse::<Suite>().is_err());
    }

    #[test]
    fn case_lists() {
        let c = rect_staircase_cases(4);
        assert!(c.contains(&(2, 2, 1)) && c.contains(&(1, 4, 0)) && c.contains(&(2, 2, 0)));
        assert!(!c.contains(&(2, 3, 0)));
        let c = rect_almost_square_cases(8);
        assert!(c.contains(&(3, 3, 2)) && c.contains(&(2, 4, 1)));
        assert!(!c.contains(&(2, 2, 2)));
    }

    #[test]
    fn matrices() {
        assert_eq!(all_matrices(2, 2, 1).len(), 16);
        assert_eq!(all_matrices(1, 1, 0).len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits { max_n: 4, max_cells: 8, order: 6, max_entry: 2 };
        assert!(run(Suite::Rsk, &limits).passed());
        assert!(run(Suite::RectStaircase, &limits).passed());
        assert!(run(Suite::RectAlmostSquare, &limits).passed());
        let r = run(Suite::StaircaseBox, &limits);
        let failing: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failing, vec!["delta(2)\\delta(1)".to_string()]);
    }
}
