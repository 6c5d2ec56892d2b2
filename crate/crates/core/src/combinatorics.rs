//! Gelfand-Tsetlin and trapezium patterns, skew diagrams and semistandard tableaux.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Integer extended by `±∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(x) => Some(x),
            _ => None,
        }
    }
}

/// The median of three extended integers.
pub fn middle3(a: ExtInt, b: ExtInt, c: ExtInt) -> ExtInt {
    let mut v = [a, b, c];
    v.sort();
    v[1]
}

fn check_nonincreasing(name: &str, v: &[i64]) -> Result<()> {
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!("{name} = {v:?} is not non-increasing")));
    }
    Ok(())
}

/// A pattern with rows `Λ_m, Λ_{m+1}, ..., Λ_{m+n}`, row `Λ_k` of length `k`.
///
/// With `m = 0` this is a Gelfand-Tsetlin pattern for `gl_n` (row `Λ_0` is
/// empty); with `m > 0` it is a trapezium pattern whose bottom row is `μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl Pattern {
    /// Build from rows `Λ_m .. Λ_{m+n}` (bottom first), checking lengths and betweenness.
    pub fn new(m: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        for (j, r) in rows.iter().enumerate() {
            if r.len() != m + j {
                return Err(Error::Invalid(format!("row {} has length {}", m + j, r.len())));
            }
        }
        let p = Pattern { m, rows };
        if !p.is_valid() {
            return Err(Error::Invalid(format!("betweenness fails for {:?}", p.rows)));
        }
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of rows above the bottom one.
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Row `Λ_k`, for `m <= k <= m + n`.
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - self.m]
    }

    pub fn top(&self) -> &[i64] {
        self.rows.last().expect("at least one row")
    }

    /// `λ_{ki}`, 1-based.
    pub fn entry(&self, k: usize, i: usize) -> i64 {
        self.row(k)[i - 1]
    }

    /// `l_{ki} = λ_{ki} - i + 1`.
    pub fn l(&self, k: usize, i: usize) -> i64 {
        self.entry(k, i) - i as i64 + 1
    }

    /// `w_k = Σ λ_{ki} - Σ λ_{k-1,i}` for `k = m+1 .. m+n`.
    pub fn weight(&self) -> Vec<i64> {
        self.rows.windows(2).map(|w| w[1].iter().sum::<i64>() - w[0].iter().sum::<i64>()).collect()
    }

    pub fn is_valid(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (lo, hi) = (&w[0], &w[1]);
            (0..lo.len()).all(|i| hi[i + 1] <= lo[i] && lo[i] <= hi[i])
        })
    }

    /// The pattern with `λ_{ki}` changed by `delta`, if still valid.
    /// Only rows strictly between the bottom and the top may change.
    pub fn shifted(&self, k: usize, i: usize, delta: i64) -> Option<Pattern> {
        if k <= self.m || k >= self.m + self.n() || i == 0 || i > k {
            return None;
        }
        let mut p = self.clone();
        p.rows[k - self.m][i - 1] += delta;
        p.is_valid().then_some(p)
    }

    /// Rows from the top row downwards, as serialized; the empty row `Λ_0` is omitted.
    pub fn rows_top_first(&self) -> Vec<Vec<i64>> {
        self.rows.iter().rev().filter(|r| !r.is_empty()).cloned().collect()
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows_top_first())
    }

    /// Concatenated rows, top first; the enumeration order sorts by this key.
    fn sort_key(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

fn interlacing_rows(upper: &[i64], out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    let i = cur.len();
    if i + 1 == upper.len() {
        out.push(cur.clone());
        return;
    }
    for v in upper[i + 1]..=upper[i] {
        cur.push(v);
        interlacing_rows(upper, out, cur);
        cur.pop();
    }
}

/// All rows of length `len(upper) - 1` interlacing with `upper`, lexicographically.
fn rows_below(upper: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    interlacing_rows(upper, &mut out, &mut Vec::new());
    out
}

fn fill_down(rows_top_down: &mut Vec<Vec<i64>>, bottom: &[i64], out: &mut Vec<Vec<Vec<i64>>>) {
    let upper = rows_top_down.last().expect("nonempty").clone();
    if upper.len() == bottom.len() + 1 {
        let ok = (0..bottom.len()).all(|i| upper[i + 1] <= bottom[i] && bottom[i] <= upper[i]);
        if ok {
            let mut rows = rows_top_down.clone();
            rows.push(bottom.to_vec());
            out.push(rows);
        }
        return;
    }
    for r in rows_below(&upper) {
        rows_top_down.push(r);
        fill_down(rows_top_down, bottom, out);
        rows_top_down.pop();
    }
}

/// Trapezium patterns with top row `λ` (length `m + n`) and bottom row `μ` (length `m`),
/// in lexicographic order of the concatenated rows.
pub fn enumerate_trapezium(lambda: &[i64], mu: &[i64], n: usize) -> Result<Vec<Pattern>> {
    check_nonincreasing("lambda", lambda)?;
    check_nonincreasing("mu", mu)?;
    let m = mu.len();
    if lambda.len() != m + n {
        return Err(Error::Invalid(format!(
            "len(lambda) = {} but m + n = {}",
            lambda.len(),
            m + n
        )));
    }
    if n == 0 {
        return Ok(if lambda == mu {
            vec![Pattern { m, rows: vec![mu.to_vec()] }]
        } else {
            vec![]
        });
    }
    let mut found = Vec::new();
    fill_down(&mut vec![lambda.to_vec()], mu, &mut found);
    let mut out: Vec<Pattern> = found
        .into_iter()
        .map(|mut rows| {
            rows.reverse();
            Pattern { m, rows }
        })
        .collect();
    out.sort_by_key(|p| p.sort_key());
    Ok(out)
}

/// Gelfand-Tsetlin patterns for the signature `λ` of `gl_n`.
pub fn enumerate_gt_patterns(lambda: &[i64]) -> Result<Vec<Pattern>> {
    enumerate_trapezium(lambda, &[], lambda.len())
}

/// Whether `L(λ)^+_μ` is nonzero: `λ_i >= μ_i >= λ_{i+n}`.
pub fn is_admissible(lambda: &[i64], mu: &[i64], n: usize) -> bool {
    lambda.len() == mu.len() + n
        && (0..mu.len()).all(|i| lambda[i] >= mu[i] && mu[i] >= lambda[i + n])
}

/// The pattern `Λ⁰` with `λ⁰_{m+k,i} = min{λ_i, μ_{i-k}}`, `μ_j = +∞` for `j <= 0`.
pub fn lambda0(lambda: &[i64], mu: &[i64], n: usize) -> Result<Pattern> {
    check_nonincreasing("lambda", lambda)?;
    check_nonincreasing("mu", mu)?;
    if !is_admissible(lambda, mu, n) {
        return Err(Error::Invalid(format!("{lambda:?}/{mu:?} is not admissible for n = {n}")));
    }
    let m = mu.len();
    let rows = (0..=n)
        .map(|k| {
            (1..=m + k)
                .map(|i| {
                    if i > k {
                        lambda[i - 1].min(mu[i - k - 1])
                    } else {
                        lambda[i - 1]
                    }
                })
                .collect()
        })
        .collect();
    let p = Pattern::new(m, rows)?;
    if p.row(m) != mu || p.top() != lambda {
        return Err(Error::Inconsistent("Λ⁰ does not have the prescribed boundary rows".into()));
    }
    Ok(p)
}

/// `w >= w'` in the dominance order of weights: all partial sums of `w - w'`
/// are nonnegative and the totals agree.
pub fn dominates(w: &[i64], other: &[i64]) -> bool {
    let mut s = 0;
    for (a, b) in w.iter().zip(other) {
        s += a - b;
        if s < 0 {
            return false;
        }
    }
    s == 0
}

/// Skew Young diagram `outer / inner`; `inner` is padded with zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewDiagram {
    outer: Vec<i64>,
    inner: Vec<i64>,
}

impl SkewDiagram {
    pub fn new(outer: &[i64], inner: &[i64]) -> Result<Self> {
        check_nonincreasing("outer", outer)?;
        check_nonincreasing("inner", inner)?;
        if inner.len() > outer.len() {
            return Err(Error::Invalid("inner shape longer than outer".into()));
        }
        if outer.last().is_some_and(|&x| x < 0) || inner.last().is_some_and(|&x| x < 0) {
            return Err(Error::Invalid("skew diagrams need nonnegative parts".into()));
        }
        let mut inner = inner.to_vec();
        inner.resize(outer.len(), 0);
        if inner.iter().zip(outer).any(|(a, b)| a > b) {
            return Err(Error::Invalid("inner shape not contained in outer".into()));
        }
        Ok(SkewDiagram { outer: outer.to_vec(), inner })
    }

    pub fn outer(&self) -> &[i64] {
        &self.outer
    }

    pub fn inner(&self) -> &[i64] {
        &self.inner
    }

    /// Boxes `(i, j)`, 1-based, in reading order (row by row, left to right).
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.outer.len() {
            for j in self.inner[i] + 1..=self.outer[i] {
                out.push((i + 1, j as usize));
            }
        }
        out
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && i <= self.outer.len() && (j as i64) > self.inner[i - 1] && (j as i64) <= self.outer[i - 1]
    }

    /// Columns as `(top box, height)`.
    pub fn columns(&self) -> Vec<((usize, usize), usize)> {
        let width = self.outer.first().copied().unwrap_or(0);
        let mut out = Vec::new();
        for j in 1..=width as usize {
            let rows: Vec<usize> = (1..=self.outer.len()).filter(|&i| self.contains((i, j))).collect();
            if let Some(&top) = rows.first() {
                out.push(((top, j), rows.len()));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({"outer": self.outer, "inner": self.inner})
    }
}

/// Content `c(α) = j - i` of the box `α = (i, j)`.
pub fn content((i, j): (usize, usize)) -> i64 {
    j as i64 - i as i64
}

/// Semistandard filling of a skew diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: SkewDiagram,
    entries: BTreeMap<(usize, usize), usize>,
}

impl Tableau {
    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| {
            let left_ok = self.entries.get(&(i, j.wrapping_sub(1))).is_none_or(|&l| l <= v);
            let up_ok = self.entries.get(&(i.wrapping_sub(1), j)).is_none_or(|&a| a < v);
            left_ok && up_ok
        })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<[usize; 3]> = self.entries.iter().map(|(&(i, j), &v)| [i, j, v]).collect();
        json!({"shape": self.shape.to_json(), "entries": entries})
    }
}

fn ssyt_rec(
    shape: &SkewDiagram,
    boxes: &[(usize, usize)],
    n: usize,
    cur: &mut BTreeMap<(usize, usize), usize>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(i, j)) = boxes.get(cur.len()) else {
        out.push(Tableau { shape: shape.clone(), entries: cur.clone() });
        return;
    };
    let lo_left = if j > 1 { cur.get(&(i, j - 1)).copied().unwrap_or(1) } else { 1 };
    let lo_up = if i > 1 { cur.get(&(i - 1, j)).map_or(1, |&a| a + 1) } else { 1 };
    for v in lo_left.max(lo_up)..=n {
        cur.insert((i, j), v);
        ssyt_rec(shape, boxes, n, cur, out);
        cur.remove(&(i, j));
    }
}

/// Semistandard tableaux of the given shape with entries in `1..=n`,
/// ordered lexicographically by entries in reading order.
pub fn enumerate_ssyt(shape: &SkewDiagram, n: usize) -> Vec<Tableau> {
    let boxes = shape.boxes();
    let mut out = Vec::new();
    ssyt_rec(shape, &boxes, n, &mut BTreeMap::new(), &mut out);
    out
}

/// Place `k` in every box of `Λ_{m+k} / Λ_{m+k-1}`.
pub fn pattern_to_ssyt(p: &Pattern) -> Result<Tableau> {
    let (m, n) = (p.m(), p.n());
    let shape = SkewDiagram::new(p.top(), p.row(m))?;
    let mut entries = BTreeMap::new();
    for k in 1..=n {
        let hi = p.row(m + k);
        let lo = p.row(m + k - 1);
        for i in 0..hi.len() {
            let start = lo.get(i).copied().unwrap_or(0);
            for j in start + 1..=hi[i] {
                entries.insert((i + 1, j as usize), k);
            }
        }
    }
    let t = Tableau { shape, entries };
    debug_assert!(t.is_semistandard());
    Ok(t)
}

/// Inverse of [`pattern_to_ssyt`].
pub fn ssyt_to_pattern(t: &Tableau, n: usize) -> Result<Pattern> {
    let outer = t.shape.outer();
    let inner = t.shape.inner();
    let m = outer.len() - n;
    if inner[m..].iter().any(|&x| x != 0) {
        return Err(Error::Invalid("inner shape longer than m".into()));
    }
    let rows = (0..=n)
        .map(|k| {
            (0..m + k)
                .map(|i| {
                    inner[i] + t.entries.iter().filter(|(&(r, _), &v)| r == i + 1 && v <= k).count() as i64
                })
                .collect()
        })
        .collect();
    let p = Pattern::new(m, rows)?;
    if p.top() != outer {
        return Err(Error::Invalid("tableau entries exceed n".into()));
    }
    Ok(p)
}

/// Weyl dimension formula for `gl_N`: `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn weyl_dim(lambda: &[i64]) -> i64 {
    let n = lambda.len();
    let (mut num, mut den) = (1i64, 1i64);
    for i in 0..n {
        for j in i + 1..n {
            num *= lambda[i] - lambda[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gt_counts_match_weyl() {
        for l in [vec![1, 0], vec![2, 0], vec![1, 1, 0], vec![2, 1, 0], vec![1, 0, 0], vec![2, 2, 1, 0], vec![3, 1, -1]] {
            assert_eq!(enumerate_gt_patterns(&l).unwrap().len() as i64, weyl_dim(&l), "{l:?}");
        }
    }

    #[test]
    fn small_gt_lists() {
        let p = enumerate_gt_patterns(&[1, 0]).unwrap();
        let tops: Vec<_> = p.iter().map(|x| x.rows_top_first()).collect();
        assert_eq!(tops, vec![vec![vec![1, 0], vec![0]], vec![vec![1, 0], vec![1]]]);
    }

    #[test]
    fn lambda0_example() {
        let p = lambda0(&[3, 2, 0], &[1], 2).unwrap();
        assert_eq!(p.row(2), &[3, 1]);
        assert_eq!(p.weight(), vec![3, 1]);
        let all = enumerate_trapezium(&[3, 2, 0], &[1], 2).unwrap();
        assert!(all.contains(&p));
        assert!(all.iter().all(|q| dominates(&p.weight(), &q.weight())));
        assert!(lambda0(&[3, 2, 0], &[4], 2).is_err());
    }

    #[test]
    fn middle_with_infinities() {
        use ExtInt::*;
        assert_eq!(middle3(PosInf, Fin(1), Fin(3)), Fin(3));
        assert_eq!(middle3(Fin(1), NegInf, Fin(2)), Fin(1));
        assert_eq!(middle3(Fin(1), NegInf, Fin(0)), Fin(0));
    }

    #[test]
    fn skew_tableaux_and_bijection() {
        let shape = SkewDiagram::new(&[3, 2, 0], &[1]).unwrap();
        let ts = enumerate_ssyt(&shape, 2);
        let ps = enumerate_trapezium(&[3, 2, 0], &[1], 2).unwrap();
        assert_eq!(ts.len(), ps.len());
        for p in &ps {
            let t = pattern_to_ssyt(p).unwrap();
            assert!(t.is_semistandard());
            assert_eq!(&ssyt_to_pattern(&t, 2).unwrap(), p);
        }
        let cols = shape.columns();
        assert_eq!(cols, vec![((2, 1), 1), ((1, 2), 2), ((1, 3), 1)]);
    }

    #[test]
    fn json_shapes() {
        let t = &enumerate_ssyt(&SkewDiagram::new(&[1, 0], &[]).unwrap(), 2)[0];
        assert_eq!(
            t.to_json().to_string(),
            r#"{"entries":[[1,1,1]],"shape":{"inner":[0,0],"outer":[1,0]}}"#
        );
    }
}
