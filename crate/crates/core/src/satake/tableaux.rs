//! Partitions, semistandard tableaux, the charge statistic, and
//! Kostka-Foulkes polynomials.

use crate::error::{ArcError, Result};
use crate::laurent::Laurent;
use num::{BigInt, One};

/// A partition: weakly decreasing positive parts (canonical form has no
/// trailing zeros).
pub type Partition = Vec<u64>;

/// Strip trailing zeros.
pub fn canonical(mut parts: Partition) -> Partition {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

pub fn is_partition(parts: &[u64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

pub fn weight(parts: &[u64]) -> u64 {
    parts.iter().sum()
}

/// All partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order (a linear extension of dominance).
pub fn partitions_of(n: u64, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, slots: usize, current: &mut Partition, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }
    rec(n, n, max_parts, &mut current, &mut out);
    out
}

/// Dominance order: `lambda` dominates `mu` (equal weights assumed).
pub fn dominates(lambda: &[u64], mu: &[u64]) -> bool {
    let mut sl = 0u64;
    let mut sm = 0u64;
    let len = lambda.len().max(mu.len());
    for i in 0..len {
        sl += lambda.get(i).copied().unwrap_or(0);
        sm += mu.get(i).copied().unwrap_or(0);
        if sl < sm {
            return false;
        }
    }
    true
}

/// All semistandard tableaux of the given shape with entries in
/// `1..=max_entry`: rows weakly increase, columns strictly increase.
pub fn semistandard_tableaux(shape: &[u64], max_entry: u8) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let rows = shape.len();
    let mut tableau: Vec<Vec<u8>> = shape.iter().map(|&r| vec![0; r as usize]).collect();
    fn rec(
        shape: &[u64],
        max_entry: u8,
        row: usize,
        col: usize,
        tableau: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if row == shape.len() {
            out.push(tableau.clone());
            return;
        }
        let (next_row, next_col) = if col + 1 < shape[row] as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let mut lo = 1u8;
        if col > 0 {
            lo = lo.max(tableau[row][col - 1]);
        }
        if row > 0 && col < shape[row - 1] as usize {
            lo = lo.max(tableau[row - 1][col] + 1);
        }
        for entry in lo..=max_entry {
            tableau[row][col] = entry;
            rec(shape, max_entry, next_row, next_col, tableau, out);
        }
        tableau[row][col] = 0;
    }
    if rows == 0 {
        out.push(Vec::new());
        return out;
    }
    if shape.iter().any(|&r| r == 0) {
        return out; // non-canonical shape
    }
    rec(shape, max_entry, 0, 0, &mut tableau, &mut out);
    out
}

pub fn content(tableau: &[Vec<u8>], max_entry: u8) -> Vec<u64> {
    let mut counts = vec![0u64; max_entry as usize];
    for row in tableau {
        for &e in row {
            counts[e as usize - 1] += 1;
        }
    }
    counts
}

/// Row reading word, bottom row to top row, each row left to right
/// (Knuth-equivalent to the tableau).
pub fn reading_word(tableau: &[Vec<u8>]) -> Vec<u8> {
    let mut word = Vec::new();
    for row in tableau.iter().rev() {
        word.extend_from_slice(row);
    }
    word
}

/// Lascoux-Schutzenberger charge of a word with partition content, by the
/// standard cyclic subword-extraction procedure.
pub fn charge(word: &[u8]) -> u64 {
    let mut remaining: Vec<(usize, u8)> = word.iter().copied().enumerate().collect();
    let mut total = 0u64;
    while !remaining.is_empty() {
        let max_letter = remaining.iter().map(|&(_, l)| l).max().unwrap();
        // Positions of the extracted standard subword, by letter.
        let mut subword: Vec<usize> = Vec::new(); // indices into `remaining`
        let mut cursor: Option<usize> = None; // index into `remaining`
        for letter in 1..=max_letter {
            let n = remaining.len();
            let start = cursor.unwrap_or(n);
            // Scan right-to-left from the cursor, wrapping cyclically.
            let found = (0..n)
                .map(|step| (start + n - 1 - step) % n)
                .find(|&i| remaining[i].1 == letter)
                .expect("partition content guarantees every letter");
            subword.push(found);
            cursor = Some(found);
        }
        // Charge contribution: walk letters 1..max; letter k+1 positioned to
        // the right of letter k (in original word order) increments the index.
        let mut index = 0u64;
        let mut contribution = 0u64;
        for k in 1..subword.len() {
            if remaining[subword[k]].0 > remaining[subword[k - 1]].0 {
                index += 1;
            }
            contribution += index;
        }
        total += contribution;
        let mut to_remove: Vec<usize> = subword;
        to_remove.sort_unstable();
        for i in to_remove.into_iter().rev() {
            remaining.remove(i);
        }
    }
    total
}

/// The Kostka-Foulkes polynomial `K_{lambda, mu}(t)`: the charge generating
/// function over semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka_foulkes(lambda: &[u64], mu: &[u64]) -> Result<Laurent> {
    let lambda = canonical(lambda.to_vec());
    let mu = canonical(mu.to_vec());
    if !is_partition(&lambda) || !is_partition(&mu) {
        return Err(ArcError::Domain("inputs must be partitions".into()));
    }
    if weight(&lambda) != weight(&mu) {
        return Err(ArcError::Domain("partitions must have equal weight".into()));
    }
    let max_entry = mu.len() as u8;
    let mut poly = Laurent::zero();
    for t in semistandard_tableaux(&lambda, max_entry) {
        if content(&t, max_entry) != mu {
            continue;
        }
        poly.add_term(charge(&reading_word(&t)) as i64, &BigInt::one());
    }
    Ok(poly)
}

/// Number of semistandard tableaux of shape `lambda`, content `mu`.
pub fn ssyt_count(lambda: &[u64], mu: &[u64]) -> u64 {
    let max_entry = mu.len() as u8;
    semistandard_tableaux(lambda, max_entry)
        .iter()
        .filter(|t| content(t, max_entry) == mu)
        .count() as u64
}
