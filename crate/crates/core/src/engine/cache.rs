//! On-disk cache of computed `S_n(q)` in the `straub-poly v1` text format.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::bipoly::QPoly;
use crate::error::{Error, Result};

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "STRAUB_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct PolyCache {
    dir: PathBuf,
}

impl PolyCache {
    /// Opens `dir`, creating it if absent.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(PolyCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: u64) -> PathBuf {
        self.dir.join(format!("straub-{n:03}.txt"))
    }

    /// `Ok(None)` when no file exists; a file that does not parse, or that
    /// records a different `n`, is reported as corrupt.
    pub fn load(&self, n: u64) -> Result<Option<QPoly>> {
        let path = self.path(n);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |source: Error| Error::CacheCorrupt {
            path: path.clone(),
            source: Box::new(source),
        };
        let (stored_n, poly) = QPoly::from_text(&text).map_err(corrupt)?;
        if stored_n != n {
            return Err(corrupt(Error::Parse {
                line: 1,
                msg: format!("header records n={stored_n}"),
            }));
        }
        Ok(Some(poly))
    }

    /// Writes through a temporary file so readers never see a partial file.
    pub fn store(&self, n: u64, poly: &QPoly) -> Result<()> {
        let path = self.path(n);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(poly.to_text(n).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute(&self, n: u64, compute: impl FnOnce() -> Result<QPoly>) -> Result<QPoly> {
        if let Some(p) = self.load(n)? {
            return Ok(p);
        }
        let p = compute()?;
        self.store(n, &p)?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = PolyCache::open(dir.path().join("nested")).unwrap();
        assert!(cache.load(1).unwrap().is_none());
        let s1 = QPoly::from_terms([(0, 1), (1, 1), (2, 1), (4, 1)]);
        let got = cache.get_or_compute(1, || Ok(s1.clone())).unwrap();
        assert_eq!(got, s1);
        let bytes = fs::read(cache.path(1)).unwrap();
        assert_eq!(bytes, s1.to_text(1).into_bytes());
        let again = cache
            .get_or_compute(1, || panic!("cache hit expected"))
            .unwrap();
        assert_eq!(again, s1);

        fs::write(cache.path(2), "# straub-poly v1 n=2 terms=3\n0 1\n").unwrap();
        assert!(matches!(cache.load(2), Err(Error::CacheCorrupt { .. })));
        fs::write(cache.path(3), s1.to_text(1)).unwrap();
        assert!(matches!(cache.load(3), Err(Error::CacheCorrupt { .. })));
    }
}
