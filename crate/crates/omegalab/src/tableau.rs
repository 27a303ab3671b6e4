//! Partitions and standard Young tableaux.
//!
//! Shapes are indexed by COLUMN lengths: the partition `[3,2]` names the
//! shape whose first column has 3 cells and second column 2 cells. Rows are
//! counted from the bottom (row 1 is the bottom row), so the drawn row shape
//! is the conjugate partition. The content of the entry in column `j`,
//! row `k` is `j - k`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{usage, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.is_empty() {
            return Err(usage("partition must have at least one part"));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(usage("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(usage(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Conjugate partition (transpose of the diagram).
    pub fn conjugate(&self) -> Partition {
        let max = self.parts[0] as usize;
        let parts = (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p as usize >= k).count() as u8)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<u8>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part as u8);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Positions `i` such that `s_i` lies in the Young subgroup: every
    /// `i in 1..n` that is not a partial sum of the parts.
    pub fn young_subgroup_generators(&self) -> Vec<usize> {
        let n = self.weight();
        let mut cuts = Vec::new();
        let mut acc = 0usize;
        for &p in &self.parts {
            acc += p as usize;
            cuts.push(acc);
        }
        (1..n).filter(|i| !cuts.contains(i)).collect()
    }

    /// Consecutive index blocks of sizes `parts[0], parts[1], ...`.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0usize;
        for &p in &self.parts {
            out.push(start..start + p as usize);
            start += p as usize;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Partition {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split(',')
            .map(|tok| tok.trim().parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| usage(format!("partition '{s}' must be comma-separated integers")))?;
        Partition::new(parts)
    }
}

/// Standard tableau stored by columns: `columns[j][k-1]` is the entry in
/// column `j+1`, row `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardTableau {
    columns: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn from_columns(columns: Vec<Vec<u8>>) -> Result<Self> {
        let t = StandardTableau { columns };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(usage("empty tableau"));
        }
        let mut seen = vec![false; n];
        for col in &self.columns {
            for &v in col {
                if v == 0 || v as usize > n || seen[v as usize - 1] {
                    return Err(usage("tableau entries must be a permutation of 1..n"));
                }
                seen[v as usize - 1] = true;
            }
        }
        for (j, col) in self.columns.iter().enumerate() {
            if col.is_empty() {
                return Err(usage("tableau has an empty column"));
            }
            if j + 1 < self.columns.len() && self.columns[j + 1].len() > col.len() {
                return Err(usage("column lengths must be weakly decreasing"));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(usage("entries must increase up each column"));
            }
        }
        for j in 1..self.columns.len() {
            for k in 0..self.columns[j].len() {
                if self.columns[j - 1][k] >= self.columns[j][k] {
                    return Err(usage("entries must increase along each row"));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.columns.iter().map(|c| c.len() as u8).collect())
            .expect("tableau columns form a partition")
    }

    pub fn columns(&self) -> &[Vec<u8>] {
        &self.columns
    }

    /// `(column, row)` of an entry, both 1-based.
    pub fn position_of(&self, entry: usize) -> Result<(usize, usize)> {
        for (j, col) in self.columns.iter().enumerate() {
            for (k, &v) in col.iter().enumerate() {
                if v as usize == entry {
                    return Ok((j + 1, k + 1));
                }
            }
        }
        Err(usage(format!("entry {entry} out of range 1..{}", self.n())))
    }

    /// Content `j - k` of the cell holding `entry`.
    pub fn content(&self, entry: usize) -> Result<i64> {
        let (j, k) = self.position_of(entry)?;
        Ok(j as i64 - k as i64)
    }

    /// Exchanges `i` and `i+1` when the result is still standard; `None`
    /// when they share a row or a column.
    pub fn apply_transposition(&self, i: usize) -> Option<StandardTableau> {
        let n = self.n();
        if i < 1 || i >= n {
            return None;
        }
        let (j1, k1) = self.position_of(i).ok()?;
        let (j2, k2) = self.position_of(i + 1).ok()?;
        if j1 == j2 || k1 == k2 {
            return None;
        }
        let mut columns = self.columns.clone();
        columns[j1 - 1][k1 - 1] = (i + 1) as u8;
        columns[j2 - 1][k2 - 1] = i as u8;
        let t = StandardTableau { columns };
        debug_assert!(t.validate().is_ok());
        Some(t)
    }

    /// Entries relabeled through `sigma`; `None` if the image is not standard.
    pub fn relabel(&self, sigma: &Permutation) -> Option<StandardTableau> {
        if sigma.n() != self.n() {
            return None;
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|&v| sigma.map(v as usize) as u8).collect())
            .collect();
        let t = StandardTableau { columns };
        t.validate().ok().map(|()| t)
    }

    /// Column reading word: columns left to right, each bottom to top.
    pub fn column_word(&self) -> Vec<u8> {
        self.columns.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, col) in self.columns.iter().enumerate() {
            if j > 0 {
                write!(f, "|")?;
            }
            for (k, v) in col.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let columns = s
            .trim()
            .split('|')
            .map(|col| {
                col.split(',')
                    .map(|tok| tok.trim().parse::<u8>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| usage(format!("tableau '{s}' must look like 1,2,3|4,5")))?;
        StandardTableau::from_columns(columns)
    }
}

/// First tableau: consecutive integers up each column, left to right.
pub fn first_tableau(lambda: &Partition) -> StandardTableau {
    let mut columns = Vec::new();
    let mut next = 1u8;
    for &len in lambda.parts() {
        let col: Vec<u8> = (next..next + len).collect();
        next += len;
        columns.push(col);
    }
    StandardTableau { columns }
}

/// Last tableau: consecutive integers along each row, bottom to top.
pub fn last_tableau(lambda: &Partition) -> StandardTableau {
    let rows = lambda.conjugate();
    let mut columns: Vec<Vec<u8>> =
        lambda.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut next = 1u8;
    for (k, &row_len) in rows.parts().iter().enumerate() {
        for j in 0..row_len as usize {
            columns[j][k] = next;
            next += 1;
        }
    }
    StandardTableau { columns }
}

/// All standard tableaux of the shape, sorted by column reading word.
pub fn enumerate_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    let ncols = lambda.num_parts();
    let n = lambda.weight();
    let mut columns: Vec<Vec<u8>> = vec![Vec::new(); ncols];
    let mut out = Vec::new();

    fn rec(
        lambda: &Partition,
        entry: u8,
        n: usize,
        columns: &mut Vec<Vec<u8>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry as usize > n {
            out.push(StandardTableau {
                columns: columns.clone(),
            });
            return;
        }
        for j in 0..columns.len() {
            let k = columns[j].len();
            if k >= lambda.parts()[j] as usize {
                continue;
            }
            // the cell to the left in the same row must already be filled
            if j > 0 && columns[j - 1].len() <= k {
                continue;
            }
            columns[j].push(entry);
            rec(lambda, entry + 1, n, columns, out);
            columns[j].pop();
        }
    }

    rec(lambda, 1, n, &mut columns, &mut out);
    out.sort_by_key(|t| t.column_word());
    out
}

/// Number of standard tableaux by direct enumeration.
pub fn count_tableaux(lambda: &Partition) -> usize {
    enumerate_tableaux(lambda).len()
}

/// Number of standard tableaux by the hook length formula, applied to the
/// row shape (the conjugate of the column lengths).
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let rows = lambda.conjugate();
    let row_parts = rows.parts();
    let cols = lambda.parts();
    let n = lambda.weight() as u64;
    let mut product = 1u64;
    for (r, &row_len) in row_parts.iter().enumerate() {
        for c in 0..row_len as usize {
            let arm = row_len as u64 - (c as u64 + 1);
            let leg = cols[c] as u64 - (r as u64 + 1);
            product *= arm + leg + 1;
        }
    }
    (1..=n).product::<u64>() / product
}

/// Moves `[i_1, i_2, ...]` in application order: applying `s_{i_1}` to
/// `from`, then `s_{i_2}`, and so on, reaches `to`. Found by breadth-first
/// search over adjacent transpositions, so the sequence is shortest.
pub fn moves_between(from: &StandardTableau, to: &StandardTableau) -> Result<Vec<usize>> {
    if from.shape() != to.shape() {
        return Err(usage(format!(
            "tableaux {from} and {to} have different shapes"
        )));
    }
    if from == to {
        return Ok(Vec::new());
    }
    let n = from.n();
    let mut parent: BTreeMap<Vec<u8>, (Vec<u8>, usize)> = BTreeMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(from.clone());
    let mut seen: BTreeMap<Vec<u8>, StandardTableau> = BTreeMap::new();
    seen.insert(from.column_word(), from.clone());
    while let Some(t) = queue.pop_front() {
        for i in 1..n {
            let Some(next) = t.apply_transposition(i) else {
                continue;
            };
            let key = next.column_word();
            if seen.contains_key(&key) {
                continue;
            }
            parent.insert(key.clone(), (t.column_word(), i));
            seen.insert(key.clone(), next.clone());
            if &next == to {
                let mut moves = Vec::new();
                let mut cursor = key;
                while let Some((prev, idx)) = parent.get(&cursor) {
                    moves.push(*idx);
                    cursor = prev.clone();
                }
                moves.reverse();
                return Ok(moves);
            }
            queue.push_back(next);
        }
    }
    unreachable!("the transposition graph on a fixed shape is connected")
}

/// Word `[i, j, ..., k]` with `s_i s_j ... s_k . u = t` (rightmost factor
/// acting first), i.e. the reversed move sequence from `u` to `t`.
pub fn word_between(t: &StandardTableau, u: &StandardTableau) -> Result<Vec<usize>> {
    let mut moves = moves_between(u, t)?;
    moves.reverse();
    Ok(moves)
}
