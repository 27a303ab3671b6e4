//! Permutations of {1..n} in one-line notation.

use std::fmt;

use crate::error::{usage, Result};

/// One-line permutation `[sigma_1, ..., sigma_n]`. Composition follows
/// `(a.compose(b))(i) = a(b(i))`, so the right factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n as u8).collect(),
        }
    }

    pub fn from_one_line(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(usage(format!("{word:?} is not a permutation of 1..{n}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { one_line: word })
    }

    /// The simple transposition `s_i` exchanging `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n, "simple transposition index out of range");
        Self::transposition(n, i, i + 1)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && 1 <= a && a <= n && 1 <= b && b <= n);
        let mut word: Vec<u8> = (1..=n as u8).collect();
        word.swap(a - 1, b - 1);
        Permutation { one_line: word }
    }

    /// The longest element `[n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    /// Value at position `i` (1-based).
    pub fn map(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation size mismatch");
        Permutation {
            one_line: other
                .one_line
                .iter()
                .map(|&v| self.one_line[v as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            word[v as usize - 1] = i as u8 + 1;
        }
        Permutation { one_line: word }
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_k}` of simple transpositions,
    /// rightmost factor acting first.
    pub fn of_word(n: usize, word: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(n);
        for &i in word.iter().rev() {
            acc = Permutation::simple(n, i).compose(&acc);
        }
        acc
    }

    /// The code `c_i = #{ j >= i : sigma_j <= sigma_i }`; every entry >= 1.
    pub fn code(&self) -> Vec<u8> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (i..n)
                    .filter(|&j| self.one_line[j] <= self.one_line[i])
                    .count() as u8
            })
            .collect()
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.one_line[i] > self.one_line[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation {
                one_line: word.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Permutation {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| usage(format!("permutation '{s}' must look like [2,1,3]")))?;
        let word = inner
            .split(',')
            .map(|tok| tok.trim().parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| usage(format!("permutation '{s}' has non-integer entries")))?;
        Permutation::from_one_line(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{seq::SliceRandom, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn compose_examples() {
        let n = 3;
        let s1 = Permutation::simple(n, 1);
        let s2 = Permutation::simple(n, 2);
        let id = Permutation::identity(n);
        assert_eq!(s1.compose(&id), s1);
        assert_eq!(s1.compose(&s1), id);
        assert_eq!(
            s1.compose(&s2),
            Permutation::from_one_line(vec![2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn code_examples() {
        let id = Permutation::identity(4);
        assert_eq!(id.code(), vec![1, 1, 1, 1]);
        let s1 = Permutation::from_one_line(vec![2, 1]).unwrap();
        assert_eq!(s1.code(), vec![2, 1]);
        let w = Permutation::longest(5);
        assert_eq!(w.code(), vec![5, 4, 3, 2, 1]);
    }

    #[test]
    fn word_products() {
        // s3 s2 s4, rightmost first
        let w = Permutation::of_word(5, &[3, 2, 4]);
        assert_eq!(w, Permutation::from_one_line(vec![1, 4, 2, 5, 3]).unwrap());
        assert_eq!(Permutation::of_word(3, &[]), Permutation::identity(3));
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
        let mut word: Vec<u8> = (1..=n as u8).collect();
        word.shuffle(rng);
        Permutation::from_one_line(word).unwrap()
    }

    #[test]
    fn group_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = random_perm(&mut rng, 5);
            let b = random_perm(&mut rng, 5);
            let c = random_perm(&mut rng, 5);
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            assert_eq!(a.compose(&a.inverse()), Permutation::identity(5));
            assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_round_trip() {
        let p = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
        assert_eq!(p.to_string(), "[3,1,2]");
        assert_eq!("[3,1,2]".parse::<Permutation>().unwrap(), p);
        assert!("[1,1,2]".parse::<Permutation>().is_err());
        assert!("3,1,2".parse::<Permutation>().is_err());
    }
}
