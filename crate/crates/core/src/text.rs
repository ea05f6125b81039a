//! Plain-text formats.
//!
//! A sequence is one line of `0`/`1`, a code is one codeword per line and an
//! array is one row per line. Lines starting with `#` are comments; a comment
//! of the form `# kind=cs n=16 r=1 len=4462` is a header describing the payload.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::seq::{parse_bits, CyclicSequence, SequenceCode, TorusArray};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Cs,
    Csc,
    C2ds,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Cs => "cs",
            Kind::Csc => "csc",
            Kind::C2ds => "c2ds",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cs" => Ok(Kind::Cs),
            "csc" => Ok(Kind::Csc),
            "c2ds" => Ok(Kind::C2ds),
            other => Err(Error::Parse { line: 1, msg: format!("unknown kind {other:?}") }),
        }
    }
}

/// Parameters carried by a `# kind=...` header line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Header {
    pub kind: Option<Kind>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub len: Option<usize>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub count: Option<usize>,
}

impl Header {
    pub fn cs(n: usize, r: usize, len: usize) -> Self {
        Self { kind: Some(Kind::Cs), n: Some(n), r: Some(r), len: Some(len), ..Self::default() }
    }

    pub fn csc(n: usize, r: usize, count: usize) -> Self {
        Self { kind: Some(Kind::Csc), n: Some(n), r: Some(r), count: Some(count), ..Self::default() }
    }

    pub fn c2ds(m: usize, n: usize, r: usize, rows: usize, cols: usize) -> Self {
        Self {
            kind: Some(Kind::C2ds),
            m: Some(m),
            n: Some(n),
            r: Some(r),
            rows: Some(rows),
            cols: Some(cols),
            ..Self::default()
        }
    }

    fn parse(body: &str, line: usize) -> Result<Option<Self>> {
        let mut h = Header::default();
        let mut any = false;
        for tok in body.split_whitespace() {
            let Some((key, value)) = tok.split_once('=') else { continue };
            let num = || {
                value.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("header value {tok:?} is not an integer"),
                })
            };
            match key {
                "kind" => {
                    h.kind = Some(value.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("unknown kind {value:?}"),
                    })?)
                }
                "m" => h.m = Some(num()?),
                "n" => h.n = Some(num()?),
                "r" => h.r = Some(num()?),
                "len" => h.len = Some(num()?),
                "rows" => h.rows = Some(num()?),
                "cols" => h.cols = Some(num()?),
                "count" => h.count = Some(num()?),
                _ => continue,
            }
            any = true;
        }
        Ok((any && h.kind.is_some()).then_some(h))
    }
}

impl fmt::Display for Header {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("#");
        if let Some(k) = self.kind {
            write!(s, " kind={}", k.as_str())?;
        }
        for (key, v) in [
            ("m", self.m),
            ("n", self.n),
            ("r", self.r),
            ("len", self.len),
            ("rows", self.rows),
            ("cols", self.cols),
            ("count", self.count),
        ] {
            if let Some(v) = v {
                write!(s, " {key}={v}")?;
            }
        }
        f.write_str(&s)
    }
}

/// Data lines and the first header found in a text payload.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub header: Option<Header>,
    pub lines: Vec<(usize, Vec<u8>)>,
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(body) = line.strip_prefix('#') {
            if doc.header.is_none() {
                doc.header = Header::parse(body, line_no)?;
            }
            continue;
        }
        doc.lines.push((line_no, parse_bits(line, line_no)?));
    }
    Ok(doc)
}

/// Reads a single sequence (exactly one data line).
pub fn parse_sequence(text: &str) -> Result<(Option<Header>, CyclicSequence)> {
    let doc = parse_document(text)?;
    match doc.lines.as_slice() {
        [] => Err(Error::EmptyInput("sequence file")),
        [(_, bits)] => Ok((doc.header, CyclicSequence::from_bits(bits)?)),
        [_, (line, _), ..] => Err(Error::Parse {
            line: *line,
            msg: "a sequence file holds exactly one data line".into(),
        }),
    }
}

/// Reads one codeword per line. `n` and `r` come from the header when present.
pub fn parse_code(text: &str) -> Result<(Option<Header>, Vec<CyclicSequence>)> {
    let doc = parse_document(text)?;
    if doc.lines.is_empty() {
        return Err(Error::EmptyInput("code file"));
    }
    let codewords = doc
        .lines
        .iter()
        .map(|(_, bits)| CyclicSequence::from_bits(bits))
        .collect::<Result<Vec<_>>>()?;
    Ok((doc.header, codewords))
}

/// Reads an array, one row per line; all rows must have equal length.
pub fn parse_array(text: &str) -> Result<(Option<Header>, TorusArray)> {
    let doc = parse_document(text)?;
    let Some((_, first)) = doc.lines.first() else {
        return Err(Error::EmptyInput("array file"));
    };
    let width = first.len();
    let mut rows = Vec::with_capacity(doc.lines.len());
    for (line, bits) in &doc.lines {
        if bits.len() != width {
            return Err(Error::Parse {
                line: *line,
                msg: format!("row of length {} in array of width {width}", bits.len()),
            });
        }
        rows.push(CyclicSequence::from_bits(bits)?);
    }
    Ok((doc.header, TorusArray::from_rows(&rows)?))
}

pub fn write_sequence(header: &Header, s: &CyclicSequence) -> String {
    format!("{header}\n{s}\n")
}

pub fn write_code(header: &Header, code: &SequenceCode) -> String {
    let mut out = format!("{header}\n");
    for c in &code.codewords {
        writeln!(out, "{c}").unwrap();
    }
    out
}

pub fn write_array(header: &Header, a: &TorusArray) -> String {
    format!("{header}\n{a}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_round_trip() {
        let h = Header::cs(16, 1, 4462);
        assert_eq!(h.to_string(), "# kind=cs n=16 r=1 len=4462");
        let doc = parse_document(&format!("{h}\n0101\n")).unwrap();
        assert_eq!(doc.header, Some(h));
    }

    #[test]
    fn comments_without_kind_are_not_headers() {
        let (h, s) = parse_sequence("# produced by hand\n# n=3\n0111\n").unwrap();
        assert!(h.is_none());
        assert_eq!(s.to_string(), "0111");
    }

    #[test]
    fn sequence_file_needs_one_line() {
        assert!(matches!(parse_sequence("# kind=cs\n"), Err(Error::EmptyInput(_))));
        assert!(matches!(parse_sequence("01\n10\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_sequence("0120\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn array_rows_must_agree() {
        let (_, a) = parse_array("# kind=c2ds m=2 n=2 r=0\n0011\n0101\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 4));
        assert!(matches!(parse_array("0011\n010\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn code_file_round_trip() {
        let code = SequenceCode::new(
            9,
            1,
            vec!["10000".parse().unwrap(), "10".parse().unwrap()],
        );
        let text = write_code(&Header::csc(9, 1, 2), &code);
        let (h, cws) = parse_code(&text).unwrap();
        assert_eq!(h.unwrap().count, Some(2));
        assert_eq!(cws, code.codewords);
    }
}
