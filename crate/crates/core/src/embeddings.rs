//! Pretrained word-vector models in the word2vec text and binary layouts.
//!
//! Both layouts start with an ASCII header line `<count> <dim>`. In the text
//! layout each following line is a token and `dim` decimal floats separated by
//! spaces. In the binary layout each record is the token bytes, one `0x20`, and
//! `dim` little-endian IEEE-754 `f32` values. Whitespace before a binary token
//! is skipped, so files that end each record with `\n` load as well.
//!
//! Vectors are kept in single precision, the way the models ship them, and
//! widened to `f64` on lookup.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::vector::EmbeddingVector;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("record {record} is truncated")]
    TruncatedRecord { record: usize },
    #[error("record {record} (`{token}`): expected {expected} components, found {found}")]
    DimensionMismatch {
        record: usize,
        token: String,
        expected: usize,
        found: usize,
    },
    #[error("record {record}: duplicate token `{token}`")]
    DuplicateToken { record: usize, token: String },
    #[error("record {record} (`{token}`): invalid component `{text}`")]
    InvalidNumber {
        record: usize,
        token: String,
        text: String,
    },
    #[error("record {record} (`{token}`): non-finite component")]
    NonFiniteComponent { record: usize, token: String },
    #[error("data after the {count} records announced by the header")]
    TrailingData { count: usize },
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordVectorFormat {
    Text,
    Binary,
}

/// Token to vector table with a fixed dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingStore {
    dim: usize,
    tokens: Vec<String>,
    index: HashMap<String, usize>,
    data: Vec<f32>,
}

/// Result of loading a model: the store plus how many all-zero rows were dropped.
#[derive(Debug, Clone)]
pub struct LoadedStore {
    pub store: EmbeddingStore,
    pub skipped_zero_rows: usize,
}

impl EmbeddingStore {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            tokens: Vec::new(),
            index: HashMap::new(),
            data: Vec::new(),
        }
    }

    /// Insert a row. Returns `false` (and stores nothing) for an all-zero row.
    pub fn insert(&mut self, token: &str, components: &[f32]) -> Result<bool, EmbeddingError> {
        let record = self.tokens.len();
        if components.len() != self.dim {
            return Err(EmbeddingError::DimensionMismatch {
                record,
                token: token.to_owned(),
                expected: self.dim,
                found: components.len(),
            });
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(EmbeddingError::NonFiniteComponent {
                record,
                token: token.to_owned(),
            });
        }
        if self.index.contains_key(token) {
            return Err(EmbeddingError::DuplicateToken {
                record,
                token: token.to_owned(),
            });
        }
        if components.iter().all(|&c| c == 0.0) {
            return Ok(false);
        }
        self.index.insert(token.to_owned(), record);
        self.tokens.push(token.to_owned());
        self.data.extend_from_slice(components);
        Ok(true)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    /// Raw single-precision row. Case-sensitive, no normalization.
    pub fn get(&self, token: &str) -> Option<&[f32]> {
        self.index
            .get(token)
            .map(|&i| &self.data[i * self.dim..(i + 1) * self.dim])
    }

    pub fn lookup(&self, token: &str) -> Result<EmbeddingVector, EmbeddingError> {
        let row = self
            .get(token)
            .ok_or_else(|| EmbeddingError::UnknownToken(token.to_owned()))?;
        // Rows are validated finite and nonzero on insert.
        Ok(EmbeddingVector::from_f32(row).expect("stored rows are valid vectors"))
    }

    /// Tokens in insertion order.
    pub fn tokens(&self) -> impl ExactSizeIterator<Item = &str> {
        self.tokens.iter().map(String::as_str)
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{} {}", self.len(), self.dim)?;
        for token in &self.tokens {
            w.write_all(token.as_bytes())?;
            for c in self.get(token).unwrap() {
                write!(w, " {c}")?;
            }
            w.write_all(b"\n")?;
        }
        w.flush()
    }

    pub fn write_binary<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{} {}", self.len(), self.dim)?;
        for token in &self.tokens {
            w.write_all(token.as_bytes())?;
            w.write_all(b" ")?;
            for c in self.get(token).unwrap() {
                w.write_all(&c.to_le_bytes())?;
            }
        }
        w.flush()
    }
}

pub fn load_word_vectors<R: BufRead>(
    mut reader: R,
    format: WordVectorFormat,
) -> Result<LoadedStore, EmbeddingError> {
    let (count, dim) = read_header(&mut reader)?;
    let mut loaded = LoadedStore {
        store: EmbeddingStore::new(dim),
        skipped_zero_rows: 0,
    };
    match format {
        WordVectorFormat::Text => read_text_records(reader, count, &mut loaded)?,
        WordVectorFormat::Binary => read_binary_records(reader, count, &mut loaded)?,
    }
    Ok(loaded)
}

fn read_header<R: BufRead>(reader: &mut R) -> Result<(usize, usize), EmbeddingError> {
    let mut line = String::new();
    reader.read_line(&mut line)?;
    let mut fields = line.split_whitespace();
    let mut number = |name: &str| -> Result<usize, EmbeddingError> {
        fields
            .next()
            .ok_or_else(|| EmbeddingError::MalformedHeader(format!("missing {name}")))?
            .parse()
            .map_err(|_| EmbeddingError::MalformedHeader(format!("{name} is not an integer")))
    };
    let count = number("count")?;
    let dim = number("dimension")?;
    if fields.next().is_some() {
        return Err(EmbeddingError::MalformedHeader(
            "expected exactly two fields".into(),
        ));
    }
    if dim == 0 {
        return Err(EmbeddingError::MalformedHeader("dimension is zero".into()));
    }
    Ok((count, dim))
}

fn accept(loaded: &mut LoadedStore, token: &str, row: &[f32]) -> Result<(), EmbeddingError> {
    if !loaded.store.insert(token, row)? {
        loaded.skipped_zero_rows += 1;
    }
    Ok(())
}

fn read_text_records<R: BufRead>(
    reader: R,
    count: usize,
    loaded: &mut LoadedStore,
) -> Result<(), EmbeddingError> {
    let dim = loaded.store.dim();
    let mut lines = reader.lines();
    let mut row = Vec::with_capacity(dim);
    for record in 0..count {
        let line = match lines.next() {
            Some(line) => line?,
            None => return Err(EmbeddingError::TruncatedRecord { record }),
        };
        let mut fields = line.split_whitespace();
        let token = fields
            .next()
            .ok_or(EmbeddingError::TruncatedRecord { record })?;
        row.clear();
        for text in fields {
            let value: f32 = text.parse().map_err(|_| EmbeddingError::InvalidNumber {
                record,
                token: token.to_owned(),
                text: text.to_owned(),
            })?;
            row.push(value);
        }
        if row.len() < dim {
            return Err(EmbeddingError::TruncatedRecord { record });
        }
        if row.len() > dim {
            return Err(EmbeddingError::DimensionMismatch {
                record,
                token: token.to_owned(),
                expected: dim,
                found: row.len(),
            });
        }
        accept(loaded, token, &row)?;
    }
    for line in lines {
        if !line?.trim().is_empty() {
            return Err(EmbeddingError::TrailingData { count });
        }
    }
    Ok(())
}

fn read_binary_records<R: BufRead>(
    mut reader: R,
    count: usize,
    loaded: &mut LoadedStore,
) -> Result<(), EmbeddingError> {
    let dim = loaded.store.dim();
    let mut token = Vec::new();
    let mut bytes = vec![0u8; dim * 4];
    let mut row = vec![0f32; dim];
    for record in 0..count {
        skip_whitespace(&mut reader)?;
        token.clear();
        reader.read_until(b' ', &mut token)?;
        if token.pop() != Some(b' ') {
            return Err(EmbeddingError::TruncatedRecord { record });
        }
        match reader.read_exact(&mut bytes) {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => {
                return Err(EmbeddingError::TruncatedRecord { record })
            }
            Err(e) => return Err(e.into()),
        }
        for (value, chunk) in row.iter_mut().zip(bytes.chunks_exact(4)) {
            *value = f32::from_le_bytes(chunk.try_into().unwrap());
        }
        let token = String::from_utf8_lossy(&token);
        accept(loaded, &token, &row)?;
    }
    skip_whitespace(&mut reader)?;
    if !reader.fill_buf()?.is_empty() {
        return Err(EmbeddingError::TrailingData { count });
    }
    Ok(())
}

fn skip_whitespace<R: BufRead>(reader: &mut R) -> io::Result<()> {
    loop {
        let buf = reader.fill_buf()?;
        if buf.is_empty() {
            return Ok(());
        }
        let n = buf.iter().take_while(|b| b.is_ascii_whitespace()).count();
        let done = n < buf.len();
        reader.consume(n);
        if done {
            return Ok(());
        }
    }
}
