//! Line-oriented instance and certificate formats.
//!
//! ```text
//! rowlatin m n k          # then m lines of n symbols in 1..=k
//! linear m n p g d        # g lines of d integers, then the m x n index grid
//! uniform m n g r         # the m x n index grid
//! graphic m n g v         # g lines `u w` (vertices 1..=v), then the grid
//! ```
//!
//! Grid indices are 1-based. `#` starts a comment.

use std::fmt::Write as _;

use super::{Cell, Instance, Mode, TransversalCertificate};
use crate::error::{Error, Result};
use crate::matroid::{AnyMatroid, GraphicMatroid, LinearMatroid, Matroid, UniformMatroid};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank line with comments stripped, as (line number, tokens).
    fn next_tokens(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if !tokens.is_empty() {
                return Ok((i + 1, tokens));
            }
        }
        Err(Error::Parse {
            line: self.last + 1,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }

    fn numbers(&mut self, what: &str, count: usize) -> Result<(usize, Vec<u64>)> {
        let (line, tokens) = self.next_tokens(what)?;
        if tokens.len() != count {
            return Err(Error::Parse {
                line,
                msg: format!("expected {count} values for {what}, found {}", tokens.len()),
            });
        }
        let values = tokens
            .iter()
            .map(|t| number(line, t))
            .collect::<Result<Vec<u64>>>()?;
        Ok((line, values))
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_tokens("") {
            Ok((line, _)) => Err(Error::Parse {
                line,
                msg: "trailing content after the grid".into(),
            }),
            Err(_) => Ok(()),
        }
    }
}

fn number(line: usize, token: &str) -> Result<u64> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{token}` is not a non-negative integer"),
    })
}

fn header_usize(line: usize, v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Parse {
        line,
        msg: format!("{v} is too large"),
    })
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let (line, header) = lines.next_tokens("a header line")?;
        let kind = header[0];
        let arity = match kind {
            "rowlatin" => 3,
            "linear" => 5,
            "uniform" | "graphic" => 4,
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown instance kind `{other}`"),
                })
            }
        };
        if header.len() != arity + 1 {
            return Err(Error::Parse {
                line,
                msg: format!("`{kind}` header takes {arity} numbers"),
            });
        }
        let nums = header[1..]
            .iter()
            .map(|t| number(line, t).and_then(|v| header_usize(line, v)))
            .collect::<Result<Vec<usize>>>()?;
        let (m, n) = (nums[0], nums[1]);
        let base = match kind {
            "rowlatin" => AnyMatroid::Partition(crate::matroid::PartitionMatroid::free(nums[2])),
            "linear" => {
                let (p, g, d) = (nums[2] as u64, nums[3], nums[4]);
                let mut vectors = Vec::with_capacity(g);
                for _ in 0..g {
                    vectors.push(lines.numbers("a ground vector", d)?.1);
                }
                LinearMatroid::new(p, d, vectors)
                    .map(AnyMatroid::Linear)
                    .map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?
            }
            "uniform" => AnyMatroid::Uniform(UniformMatroid::new(nums[3], nums[2])),
            _ => {
                let (g, v) = (nums[2], nums[3]);
                let mut edges = Vec::with_capacity(g);
                for _ in 0..g {
                    let (l, e) = lines.numbers("an edge", 2)?;
                    let mut ends = [0usize; 2];
                    for (slot, &x) in ends.iter_mut().zip(&e) {
                        if x == 0 || x as usize > v {
                            return Err(Error::Parse {
                                line: l,
                                msg: format!("vertex {x} is outside 1..={v}"),
                            });
                        }
                        *slot = x as usize - 1;
                    }
                    edges.push((ends[0], ends[1]));
                }
                AnyMatroid::Graphic(GraphicMatroid::new(v, edges))
            }
        };
        let g = base.ground_size();
        let mut grid = Vec::with_capacity(m * n);
        for _ in 0..m {
            let (l, row) = lines.numbers("a grid row", n)?;
            for x in row {
                if x == 0 || x as usize > g {
                    let what = if kind == "rowlatin" {
                        "symbol"
                    } else {
                        "element index"
                    };
                    return Err(Error::Parse {
                        line: l,
                        msg: format!("{what} {x} is outside 1..={g}"),
                    });
                }
                grid.push(x as usize - 1);
            }
        }
        lines.finish()?;
        Instance::new(m, n, grid, base)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let (m, n) = (self.m, self.n);
        match &self.base {
            AnyMatroid::Partition(p) => {
                let _ = writeln!(out, "rowlatin {m} {n} {}", p.ground_size());
            }
            AnyMatroid::Linear(l) => {
                let _ = writeln!(
                    out,
                    "linear {m} {n} {} {} {}",
                    l.prime(),
                    l.ground_size(),
                    l.dim()
                );
                for v in l.vectors() {
                    out.push_str(&join(v.iter()));
                    out.push('\n');
                }
            }
            AnyMatroid::Uniform(u) => {
                let _ = writeln!(out, "uniform {m} {n} {} {}", u.ground_size(), u.rank());
            }
            AnyMatroid::Graphic(g) => {
                let _ = writeln!(out, "graphic {m} {n} {} {}", g.ground_size(), g.vertices());
                for &(u, w) in g.edges() {
                    let _ = writeln!(out, "{} {}", u + 1, w + 1);
                }
            }
        }
        for r in 1..=m {
            out.push_str(&join(self.row_labels(r).iter()));
            out.push('\n');
        }
        out
    }

    pub fn describe(&self) -> String {
        match self.mode() {
            Mode::RowLatin { k } => format!("{}x{} row-latin on {k} symbols", self.m, self.n),
            Mode::Matroid => format!("{}x{} over a {} matroid", self.m, self.n, self.base.kind()),
        }
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl TransversalCertificate {
    /// One `row col element` line per cell, in column order.
    pub fn to_lines(&self, instance: &Instance) -> String {
        let mut out = String::new();
        for &c in &self.positions {
            let _ = writeln!(out, "{} {} {}", c.row, c.col, instance.label(c));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateLine {
    pub cell: Cell,
    pub label: usize,
}

/// Reads `row col element` lines; `#` comments and `key=value` stats lines are skipped.
pub fn parse_certificate(text: &str) -> Result<Vec<CertificateLine>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() || tokens.iter().all(|t| t.contains('=')) {
            continue;
        }
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: i + 1,
                msg: "certificate lines are `row col element`".into(),
            });
        }
        let v = tokens
            .iter()
            .map(|t| number(i + 1, t).and_then(|x| header_usize(i + 1, x)))
            .collect::<Result<Vec<usize>>>()?;
        out.push(CertificateLine {
            cell: Cell::new(v[0], v[1]),
            label: v[2],
        });
    }
    Ok(out)
}
