//! Built-in shifts of finite type.
//!
//! Two non-finite-type examples are deliberately absent: the even shift,
//! whose independence entropy is 0 (a maximizing point carries `{0,1}` at
//! most twice), and the Dyck shift on `M` bracket pairs, whose independence
//! entropy is `log M`. Neither has a finite forbidden list.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::shift::{validate_spec, Alphabet, ModelFile, RawWord, SubshiftSpec, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelDescriptor {
    /// Full shift on `σ` symbols `0..σ-1`.
    Full(usize),
    HardSquare,
    /// Proper colorings with `n` colors `1..n`.
    Coloring(usize),
    /// Letters `-M..-1, 1..M`; adjacent product must be at least `-1`.
    Beach(usize),
    /// Runs of 0s between 1s have length in `[d, k]`; `k = None` is unbounded.
    Rll { d: usize, k: Option<usize> },
    /// Alphabet `{1,2,3}`, transitions 1→2, 1→3, 2→3, 3→1.
    Plastic,
    Words { alphabet: Vec<String>, forbidden: Vec<RawWord> },
    File(PathBuf),
}

impl ModelDescriptor {
    /// Arrays over A..Z avoiding "ADD".
    pub fn add() -> Self {
        ModelDescriptor::Words {
            alphabet: (b'A'..=b'Z').map(|c| (c as char).to_string()).collect(),
            forbidden: vec![RawWord::Text("ADD".into())],
        }
    }
}

impl FromStr for ModelDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<usize> {
            a.ok_or_else(|| Error::InvalidModel(format!("{name} needs a parameter")))?
                .trim()
                .parse()
                .map_err(|_| Error::InvalidModel(format!("bad parameter in {s:?}")))
        };
        match name {
            "hard_square" => Ok(ModelDescriptor::HardSquare),
            "plastic" => Ok(ModelDescriptor::Plastic),
            "add" => Ok(ModelDescriptor::add()),
            "full" => Ok(ModelDescriptor::Full(num(arg)?)),
            "coloring" => Ok(ModelDescriptor::Coloring(num(arg)?)),
            "beach" => Ok(ModelDescriptor::Beach(num(arg)?)),
            "rll" => {
                let a = arg.ok_or_else(|| Error::InvalidModel("rll needs d,k".into()))?;
                let (d, k) = a.split_once(',').ok_or_else(|| Error::InvalidModel("rll needs d,k".into()))?;
                let d = num(Some(d))?;
                let k = match k.trim() {
                    "inf" | "∞" => None,
                    other => Some(num(Some(other))?),
                };
                Ok(ModelDescriptor::Rll { d, k })
            }
            "file" => Ok(ModelDescriptor::File(PathBuf::from(arg.ok_or_else(|| Error::InvalidModel("file needs a path".into()))?))),
            _ => Err(Error::InvalidModel(format!("unknown model {s:?}"))),
        }
    }
}

impl fmt::Display for ModelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelDescriptor::Full(n) => write!(f, "full:{n}"),
            ModelDescriptor::HardSquare => write!(f, "hard_square"),
            ModelDescriptor::Coloring(n) => write!(f, "coloring:{n}"),
            ModelDescriptor::Beach(m) => write!(f, "beach:{m}"),
            ModelDescriptor::Rll { d, k: Some(k) } => write!(f, "rll:{d},{k}"),
            ModelDescriptor::Rll { d, k: None } => write!(f, "rll:{d},inf"),
            ModelDescriptor::Plastic => write!(f, "plastic"),
            ModelDescriptor::Words { .. } => write!(f, "words"),
            ModelDescriptor::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn numbered(range: impl Iterator<Item = i64>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

pub fn build_model(desc: &ModelDescriptor) -> Result<SubshiftSpec> {
    build_model_with(desc, &Caps::default())
}

pub fn build_model_with(desc: &ModelDescriptor, caps: &Caps) -> Result<SubshiftSpec> {
    let max_len = caps.max_forbidden_len;
    let check_len = |words: &[Word]| -> Result<()> {
        match words.iter().find(|w| w.len() > max_len) {
            Some(w) => Err(Error::ForbiddenTooLong { word: format!("{:?}", w.letters()), len: w.len(), cap: max_len }),
            None => Ok(()),
        }
    };
    match desc {
        ModelDescriptor::Full(sigma) => {
            if *sigma < 1 {
                return Err(Error::InvalidModel("full shift needs at least one symbol".into()));
            }
            Ok(SubshiftSpec::from_words(Alphabet::new(&numbered(0..*sigma as i64))?, vec![]))
        }
        ModelDescriptor::HardSquare => validate_spec(&["0", "1"], &[RawWord::Text("11".into())], max_len),
        ModelDescriptor::Coloring(n) => {
            if *n < 2 {
                return Err(Error::InvalidModel("coloring needs n >= 2".into()));
            }
            let alphabet = Alphabet::new(&numbered(1..=*n as i64))?;
            let words = (0..*n as u8).map(|a| Word(vec![a, a])).collect();
            Ok(SubshiftSpec::from_words(alphabet, words))
        }
        ModelDescriptor::Beach(m) => {
            if *m < 1 || *m > 32 {
                return Err(Error::InvalidModel("beach needs 1 <= M <= 32".into()));
            }
            let m = *m as i64;
            let values: Vec<i64> = (-m..=-1).chain(1..=m).collect();
            let alphabet = Alphabet::new(&numbered(values.iter().copied()))?;
            let mut words = Vec::new();
            for (i, a) in values.iter().enumerate() {
                for (j, b) in values.iter().enumerate() {
                    if a * b <= -2 {
                        words.push(Word(vec![i as u8, j as u8]));
                    }
                }
            }
            Ok(SubshiftSpec::from_words(alphabet, words))
        }
        ModelDescriptor::Rll { d, k } => {
            if let Some(k) = k {
                if d >= k {
                    return Err(Error::InvalidModel(format!("rll needs d < k, got d = {d}, k = {k}")));
                }
            }
            let mut words: Vec<Word> = (0..*d)
                .map(|j| {
                    let mut w = vec![1u8];
                    w.extend(std::iter::repeat_n(0u8, j));
                    w.push(1);
                    Word(w)
                })
                .collect();
            if let Some(k) = k {
                words.push(Word(vec![0u8; k + 1]));
            }
            check_len(&words)?;
            Ok(SubshiftSpec::from_words(Alphabet::new(&["0", "1"])?, words))
        }
        ModelDescriptor::Plastic => {
            let forbidden: Vec<RawWord> =
                ["11", "21", "22", "32", "33"].iter().map(|w| RawWord::Text(w.to_string())).collect();
            validate_spec(&["1", "2", "3"], &forbidden, max_len)
        }
        ModelDescriptor::Words { alphabet, forbidden } => validate_spec(alphabet, forbidden, max_len),
        ModelDescriptor::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::ModelFile(format!("{}: {e}", path.display())))?;
            ModelFile::from_json(&text)?.into_spec(max_len)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(spec: &SubshiftSpec) -> Vec<String> {
        spec.forbidden()
            .iter()
            .map(|w| w.letters().iter().map(|&a| spec.alphabet().symbol(a).to_string()).collect::<Vec<_>>().join(" "))
            .collect()
    }

    #[test]
    fn beach_two_pairs() {
        let spec = build_model(&ModelDescriptor::Beach(2)).unwrap();
        let mut got = render(&spec);
        got.sort();
        let mut want: Vec<String> =
            ["-2 1", "1 -2", "-2 2", "2 -2", "-1 2", "2 -1"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(spec.alphabet().symbols(), &["-2", "-1", "1", "2"]);
    }

    #[test]
    fn rll_one_inf_is_hard_square() {
        let a = build_model(&ModelDescriptor::Rll { d: 1, k: None }).unwrap();
        let b = build_model(&ModelDescriptor::HardSquare).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rll_forbidden_words() {
        let spec = build_model(&ModelDescriptor::Rll { d: 2, k: Some(5) }).unwrap();
        assert_eq!(render(&spec), vec!["1 1", "1 0 1", "0 0 0 0 0 0"]);
        assert_eq!(spec.memory(), 5);
        assert!(build_model(&ModelDescriptor::Rll { d: 3, k: Some(3) }).is_err());
        assert!(build_model(&ModelDescriptor::Rll { d: 1, k: Some(9) }).is_err());
        let caps = Caps { max_forbidden_len: 10, ..Caps::default() };
        assert!(build_model_with(&ModelDescriptor::Rll { d: 1, k: Some(9) }, &caps).is_ok());
    }

    #[test]
    fn add_model() {
        let spec = build_model(&ModelDescriptor::add()).unwrap();
        assert_eq!(spec.sigma(), 26);
        assert_eq!(render(&spec), vec!["A D D"]);
    }

    #[test]
    fn parse_cli_syntax() {
        for s in ["hard_square", "coloring:4", "beach:3", "rll:1,3", "rll:2,inf", "plastic", "full:2", "file:x.json"] {
            let d: ModelDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("coloring".parse::<ModelDescriptor>().is_err());
        assert!("nope".parse::<ModelDescriptor>().is_err());
        assert!(build_model(&ModelDescriptor::Coloring(1)).is_err());
    }
}
