use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::Permutation;
use crate::error::{Error, Result};

/// Parses a generator file: header `n g`, then one line of `n` images per
/// generator. Each permutation is returned with its 1-based line number.
pub fn parse_generators(text: &str, path: &Path) -> Result<(usize, Vec<(usize, Permutation)>)> {
    let perr = |line: usize, msg: String| Error::Parse { path: PathBuf::from(path), line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums = body
            .split_whitespace()
            .map(|s| s.parse::<usize>().map_err(|e| perr(line_no, format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(perr(line_no, "expected header \"n g\"".into()));
                }
                header = Some((nums[0], nums[1]));
            }
            Some((n, _)) => {
                if nums.len() != n {
                    return Err(Error::DegreeMismatch { expected: n, found: nums.len() });
                }
                let p = Permutation::from_images(nums).map_err(|e| perr(line_no, e.to_string()))?;
                out.push((line_no, p));
            }
        }
    }
    let (n, g) = header.ok_or_else(|| perr(0, "missing \"n g\" header".into()))?;
    if out.len() != g {
        return Err(perr(0, format!("header announces {g} generators, found {}", out.len())));
    }
    Ok((n, out))
}

pub fn read_generators(path: &Path) -> Result<(usize, Vec<(usize, Permutation)>)> {
    let text = std::fs::read_to_string(path)?;
    parse_generators(&text, path)
}

pub fn render_generators(n: usize, gens: &[Permutation]) -> String {
    let mut out = String::new();
    writeln!(out, "{n} {}", gens.len()).unwrap();
    for g in gens {
        let line: Vec<String> = g.images().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn write_generators(path: &Path, n: usize, gens: &[Permutation]) -> Result<()> {
    std::fs::write(path, render_generators(n, gens))?;
    Ok(())
}
