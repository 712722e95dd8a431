use std::collections::BTreeMap;

use num_traits::Zero;

use super::Certificate;
use crate::configuration::{canonical_representative, pencil_degree, PointConfig};
use crate::error::{Error, Result};
use crate::exactq::{fmt_rat_full, parse_rat, primitive_integer_vector, Rat};

pub const TRUST_NOTE: &str =
    "the listed zeros are assumed to be the complete real zero set of the target form";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateMeta {
    pub seed: Option<u64>,
    pub n: Option<Rat>,
    pub threshold: Option<Rat>,
    pub version: String,
}

impl Default for CertificateMeta {
    fn default() -> Self {
        CertificateMeta {
            seed: None,
            n: None,
            threshold: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

const SECTIONS: [&str; 6] = ["points", "u", "a", "neg_index", "l_value", "meta"];

impl Certificate {
    /// Rescales every point to its canonical representative, adjusting `u` and
    /// `a` so that the moment matrix and `l_a` are unchanged; `u` is then made
    /// a primitive integer vector.
    pub fn canonicalized(&self) -> Certificate {
        let d = pencil_degree(self.config.nvars()) as i32;
        let mut points = Vec::with_capacity(self.config.len());
        let mut u = Vec::with_capacity(self.u.len());
        let mut a = Vec::with_capacity(self.a.len());
        for ((v, uj), aj) in self.config.points().iter().zip(&self.u).zip(&self.a) {
            let c = canonical_representative(v);
            let i = v.iter().position(|x| !x.is_zero()).expect("nonzero point");
            let lambda = &c[i] / &v[i];
            u.push(uj / lambda.pow(d));
            a.push(aj / lambda.pow(2 * d));
            points.push(c);
        }
        let config = PointConfig::new(self.config.nvars(), points, self.config.zero_count())
            .expect("rescaling keeps the configuration valid");
        Certificate {
            config,
            u: primitive_integer_vector(&u),
            a,
            neg_index: self.neg_index,
            l_value: self.l_value.clone(),
            meta: self.meta.clone(),
        }
    }

    /// Machine-readable text; points are written as canonical representatives.
    pub fn to_text(&self) -> String {
        let c = self.canonicalized();
        let mut out = String::from("[points]\n");
        out.push_str(&format!("nvars={} zeros={}\n", c.config.nvars(), c.config.zero_count()));
        for p in c.config.points() {
            let coords: Vec<String> = p.iter().map(fmt_rat_full).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        out.push_str("\n[u]\n");
        for x in &c.u {
            out.push_str(&fmt_rat_full(x));
            out.push('\n');
        }
        out.push_str("\n[a]\n");
        for x in &c.a {
            out.push_str(&fmt_rat_full(x));
            out.push('\n');
        }
        out.push_str(&format!("\n[neg_index]\n{}\n", c.neg_index + 1));
        out.push_str(&format!("\n[l_value]\n{}\n", fmt_rat_full(&c.l_value)));
        out.push_str("\n[meta]\n");
        if let Some(seed) = c.meta.seed {
            out.push_str(&format!("seed={seed}\n"));
        }
        if let Some(n) = &c.meta.n {
            out.push_str(&format!("N={}\n", fmt_rat_full(n)));
        }
        if let Some(t) = &c.meta.threshold {
            out.push_str(&format!("threshold={}\n", fmt_rat_full(t)));
        }
        out.push_str(&format!("version={}\n", c.meta.version));
        out.push_str(&format!("trust={TRUST_NOTE}\n"));
        out
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut sections: BTreeMap<&str, Vec<(usize, &str)>> = BTreeMap::new();
        let mut current: Option<&str> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let name = SECTIONS
                    .iter()
                    .find(|s| **s == name)
                    .ok_or_else(|| Error::parse(line_no, format!("unknown section [{name}]")))?;
                if sections.insert(name, Vec::new()).is_some() {
                    return Err(Error::parse(line_no, format!("duplicate section [{name}]")));
                }
                current = Some(name);
                continue;
            }
            let name = current.ok_or_else(|| Error::parse(line_no, "content before first section"))?;
            sections.get_mut(name).expect("section exists").push((line_no, line));
        }
        let section = |name: &str| {
            sections
                .get(name)
                .ok_or_else(|| Error::parse(0, format!("missing section [{name}]")))
        };

        let points_lines = section("points")?;
        let (&(header_line, header), rows) = points_lines
            .split_first()
            .ok_or_else(|| Error::parse(0, "empty [points] section"))?;
        let fields = key_values(header_line, header)?;
        let nvars: usize = field(&fields, "nvars", header_line)?;
        let zeros: usize = field(&fields, "zeros", header_line)?;
        if nvars != 3 && nvars != 4 {
            return Err(Error::parse(header_line, "nvars must be 3 or 4"));
        }
        let mut points = Vec::new();
        for &(line_no, line) in rows {
            let p: Vec<Rat> = line
                .split_whitespace()
                .map(parse_rat)
                .collect::<Option<_>>()
                .ok_or_else(|| Error::parse(line_no, "bad rational coordinate"))?;
            if p.len() != nvars {
                return Err(Error::parse(line_no, format!("expected {nvars} coordinates")));
            }
            points.push(p);
        }
        let count = points.len();
        let config = PointConfig::new(nvars, points, zeros)?;
        let u = rational_list(section("u")?, count, "u")?;
        let a = rational_list(section("a")?, count, "a")?;
        let neg_lines = section("neg_index")?;
        let neg_index = match neg_lines.as_slice() {
            [(line_no, line)] => line
                .parse::<usize>()
                .ok()
                .filter(|i| (1..=count).contains(i))
                .map(|i| i - 1)
                .ok_or_else(|| Error::parse(*line_no, "neg_index must be a position 1..=n"))?,
            _ => return Err(Error::parse(0, "[neg_index] must hold one line")),
        };
        let l_value = rational_list(section("l_value")?, 1, "l_value")?.remove(0);

        let mut meta = CertificateMeta {
            version: String::new(),
            ..CertificateMeta::default()
        };
        if let Some(lines) = sections.get("meta") {
            for &(line_no, line) in lines {
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| Error::parse(line_no, "expected key=value"))?;
                match k.trim() {
                    "seed" => {
                        meta.seed = Some(v.trim().parse().map_err(|_| Error::parse(line_no, "bad seed"))?)
                    }
                    "N" => meta.n = Some(parse_rat(v.trim()).ok_or_else(|| Error::parse(line_no, "bad N"))?),
                    "threshold" => {
                        meta.threshold =
                            Some(parse_rat(v.trim()).ok_or_else(|| Error::parse(line_no, "bad threshold"))?)
                    }
                    "version" => meta.version = v.trim().to_string(),
                    _ => {}
                }
            }
        }
        Ok(Certificate {
            config,
            u,
            a,
            neg_index,
            l_value,
            meta,
        })
    }
}

fn key_values(line_no: usize, line: &str) -> Result<BTreeMap<String, String>> {
    line.split_whitespace()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::parse(line_no, "expected `nvars=<n> zeros=<k>`"))
        })
        .collect()
}

fn field<T: std::str::FromStr>(fields: &BTreeMap<String, String>, key: &str, line_no: usize) -> Result<T> {
    fields
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(line_no, format!("missing or bad `{key}`")))
}

fn rational_list(lines: &[(usize, &str)], expected: usize, name: &str) -> Result<Vec<Rat>> {
    if lines.len() != expected {
        return Err(Error::parse(
            lines.first().map_or(0, |l| l.0),
            format!("[{name}] has {} entries, expected {expected}", lines.len()),
        ));
    }
    lines
        .iter()
        .map(|&(line_no, line)| parse_rat(line).ok_or_else(|| Error::parse(line_no, "bad rational")))
        .collect()
}
