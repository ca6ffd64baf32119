//! Permutation codes and their text file formats.
//!
//! Code file: first line `n d`, then one permutation per line.
//! Generator file: first line `n`, then one permutation per line. Several generating
//! sets may share a file when separated by blank lines.
//!
//! Lines starting with `#` are ignored by both parsers.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{kendall_distance, PairSignature, Permutation};

/// A set of distinct permutations of a common degree, with an optional claimed
/// minimum distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermCode {
    n: usize,
    claimed_distance: Option<u32>,
    members: Vec<Permutation>,
}

/// Outcome of a minimum distance scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceScan {
    pub min_distance: Option<u32>,
    /// A pair attaining the minimum (indices into the member list).
    pub witness: Option<(usize, usize)>,
}

impl PermCode {
    pub fn new(n: usize, members: Vec<Permutation>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(members.len());
        for m in &members {
            if m.degree() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: m.degree(),
                });
            }
            if !seen.insert(m) {
                return Err(Error::InvalidPermutation(format!("duplicate codeword {m}")));
            }
        }
        Ok(PermCode {
            n,
            claimed_distance: None,
            members,
        })
    }

    pub fn with_claimed_distance(mut self, d: u32) -> Self {
        self.claimed_distance = Some(d);
        self
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn claimed_distance(&self) -> Option<u32> {
        self.claimed_distance
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    /// Minimum pairwise Kendall distance over all distinct pairs.
    pub fn min_distance(&self) -> DistanceScan {
        min_pairwise_distance(&self.members)
    }

    /// Checks the claimed distance (or `d` when given) against the actual minimum.
    pub fn verify(&self, d: Option<u32>) -> Result<u32> {
        let target = d.or(self.claimed_distance).ok_or_else(|| {
            Error::Precondition("no target distance given and none claimed".into())
        })?;
        let scan = self.min_distance();
        match (scan.min_distance, scan.witness) {
            (Some(m), Some((i, j))) if m < target => Err(Error::Verification(format!(
                "codewords {} and {} are at distance {m} < {target}",
                self.members[i], self.members[j]
            ))),
            (Some(m), _) => Ok(m),
            // A single codeword satisfies any distance.
            (None, _) => Ok(target),
        }
    }

    pub fn to_code_file(&self, d: u32) -> String {
        let mut s = format!("{} {}\n", self.n, d);
        for m in &self.members {
            let _ = writeln!(s, "{m}");
        }
        s
    }
}

/// Minimum distance over distinct pairs, using pair signatures when the degree allows.
pub fn min_pairwise_distance(members: &[Permutation]) -> DistanceScan {
    let mut best: Option<(u32, usize, usize)> = None;
    let sigs: Option<Vec<PairSignature>> = members.iter().map(PairSignature::of).collect();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let d = match &sigs {
                Some(s) => s[i].distance(s[j]),
                None => kendall_distance(&members[i], &members[j])
                    .expect("codewords share a degree")
                    .get(),
            };
            if best.is_none_or(|(b, _, _)| d < b) {
                best = Some((d, i, j));
            }
        }
    }
    DistanceScan {
        min_distance: best.map(|b| b.0),
        witness: best.map(|b| (b.1, b.2)),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
}

fn parse_perm_line(line_no: usize, line: &str, n: usize) -> Result<Permutation> {
    let p: Permutation = line.parse().map_err(|e: Error| Error::Parse {
        line: line_no,
        msg: e.to_string(),
    })?;
    if p.degree() != n {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected {n} entries, found {}", p.degree()),
        });
    }
    Ok(p)
}

fn parse_usize(line_no: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse {
        line: line_no,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("bad {what}"),
    })
}

/// Parses a code file. The result carries the header distance as its claim.
pub fn parse_code_file(text: &str) -> Result<PermCode> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n d`".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(hl, toks.next(), "n")?;
    let d = parse_usize(hl, toks.next(), "d")?;
    if toks.next().is_some() {
        return Err(Error::Parse {
            line: hl,
            msg: "header must be `n d`".into(),
        });
    }
    let members = lines
        .map(|(i, l)| parse_perm_line(i, l, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(PermCode::new(n, members)?.with_claimed_distance(d as u32))
}

/// Parses a generator file into one or more generating sets.
pub fn parse_generator_file(text: &str) -> Result<(usize, Vec<Vec<Permutation>>)> {
    let mut lines = content_lines(text).skip_while(|(_, l)| l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n`".into(),
    })?;
    let n = parse_usize(hl, header.split_whitespace().next(), "n")?;
    let mut sets: Vec<Vec<Permutation>> = vec![Vec::new()];
    for (i, l) in lines {
        if l.is_empty() {
            if !sets.last().unwrap().is_empty() {
                sets.push(Vec::new());
            }
            continue;
        }
        sets.last_mut().unwrap().push(parse_perm_line(i, l, n)?);
    }
    sets.retain(|s| !s.is_empty());
    if sets.is_empty() {
        return Err(Error::Parse {
            line: hl,
            msg: "no generators".into(),
        });
    }
    Ok((n, sets))
}

pub fn format_generator_file(n: usize, generators: &[Permutation]) -> String {
    let mut s = format!("{n}\n");
    for g in generators {
        let _ = writeln!(s, "{g}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_file_round_trip() {
        let text = "3 1\n1 2 3\n# comment\n2 1 3\n\n3 2 1\n";
        let code = parse_code_file(text).unwrap();
        assert_eq!(code.len(), 3);
        assert_eq!(code.claimed_distance(), Some(1));
        assert_eq!(code.verify(None).unwrap(), 1);
        assert_eq!(parse_code_file(&code.to_code_file(1)).unwrap(), code);
    }

    #[test]
    fn verify_reports_offending_pair() {
        let code = parse_code_file("3 2\n1 2 3\n2 1 3\n").unwrap();
        let err = code.verify(None).unwrap_err();
        assert!(
            matches!(err, Error::Verification(ref m) if m.contains("1 2 3") && m.contains("2 1 3"))
        );
    }

    #[test]
    fn header_length_mismatch_is_rejected() {
        assert!(matches!(
            parse_code_file("4 1\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_code_file("3 1\n1 2 3\n1 2 3\n").is_err());
    }

    #[test]
    fn generator_blocks() {
        let (n, sets) = parse_generator_file("3\n2 1 3\n\n2 3 1\n1 3 2\n").unwrap();
        assert_eq!(n, 3);
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[1].len(), 2);
    }
}
