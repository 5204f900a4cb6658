use crate::error::{Error, Result};

/// Index of a symbol within an [`Alphabet`].
pub type Symbol = usize;

/// A word over an alphabet, stored as symbol indices.
pub type Word = Vec<Symbol>;

/// An ordered, duplicate-free set of input symbols.
///
/// Symbol order is fixed at construction and is significant: transition
/// tables, breadth-first numbering and serialization all follow it.
/// Symbols are usually single characters (`a`, `b`), but multi-character
/// names such as `a1` are allowed; they must not contain whitespace or `#`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::invalid("alphabet must be non-empty"));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::invalid(format!("alphabet symbol {i} is empty")));
            }
            if s.chars().any(|c| c.is_whitespace() || c == '#' || c.is_control()) {
                return Err(Error::invalid(format!(
                    "alphabet symbol `{s}` contains whitespace or reserved characters"
                )));
            }
            if symbols[..i].contains(s) {
                return Err(Error::invalid(format!("duplicate alphabet symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Builds an alphabet of single-character symbols, one per character.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: Symbol) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Option<Symbol> {
        self.symbols.iter().position(|s| s == symbol)
    }

    fn all_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a textual word into symbol indices.
    ///
    /// If the text contains whitespace it is split into whitespace-separated
    /// tokens; otherwise each character is taken as one symbol (which
    /// requires all alphabet symbols to be single characters). The empty
    /// string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.chars().any(char::is_whitespace) {
            text.split_whitespace()
                .enumerate()
                .map(|(pos, tok)| {
                    self.index_of(tok).ok_or(Error::UnknownSymbol {
                        symbol: tok.to_string(),
                        position: pos,
                    })
                })
                .collect()
        } else if self.all_single_char() {
            text.chars()
                .enumerate()
                .map(|(pos, c)| {
                    self.index_of(&c.to_string()).ok_or(Error::UnknownSymbol {
                        symbol: c.to_string(),
                        position: pos,
                    })
                })
                .collect()
        } else {
            Err(Error::invalid(
                "alphabet has multi-character symbols; separate word symbols with spaces",
            ))
        }
    }

    /// Renders a word of symbol indices as text. Single-character alphabets
    /// concatenate; otherwise symbols are joined with spaces.
    pub fn format_word(&self, word: &[Symbol]) -> String {
        let sep = if self.all_single_char() { "" } else { " " };
        word.iter()
            .map(|&s| self.symbols[s].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}
