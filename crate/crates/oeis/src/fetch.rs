use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Duration;

use crate::bfile::{parse_bfile, BFile};
use crate::error::{Error, Result};
use crate::id::SequenceId;

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const CACHE_DIR_ENV: &str = "RCOMP_CACHE_DIR";
pub const TIMEOUT_ENV: &str = "RCOMP_HTTP_TIMEOUT_SECS";
pub const RETRIES_ENV: &str = "RCOMP_HTTP_RETRIES";

#[derive(Clone, Debug)]
pub struct FetchConfig {
    pub cache_dir: PathBuf,
    /// Never touch the network; a cache miss is an error.
    pub offline: bool,
    pub timeout: Duration,
    /// Extra attempts after the first failed request.
    pub retries: u32,
    pub base_url: String,
}

impl FetchConfig {
    pub fn new(cache_dir: impl Into<PathBuf>) -> Self {
        FetchConfig {
            cache_dir: cache_dir.into(),
            offline: false,
            timeout: Duration::from_secs(30),
            retries: 2,
            base_url: DEFAULT_BASE_URL.to_string(),
        }
    }

    /// Defaults overridden by `RCOMP_CACHE_DIR`, `RCOMP_HTTP_TIMEOUT_SECS`
    /// and `RCOMP_HTTP_RETRIES` where set.
    pub fn from_env() -> Self {
        let mut cfg = FetchConfig::new(default_cache_dir());
        if let Some(secs) = env_parse::<u64>(TIMEOUT_ENV) {
            cfg.timeout = Duration::from_secs(secs);
        }
        if let Some(n) = env_parse::<u32>(RETRIES_ENV) {
            cfg.retries = n;
        }
        cfg
    }

    pub fn cache_path(&self, id: SequenceId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    pub fn url(&self, id: SequenceId) -> String {
        format!("{}/{}/{}", self.base_url.trim_end_matches('/'), id, id.bfile_name())
    }
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|v| v.trim().parse().ok())
}

/// `$RCOMP_CACHE_DIR`, else `$XDG_CACHE_HOME/rcomp/oeis`, else
/// `$HOME/.cache/rcomp/oeis`, else a directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("rcomp").join("oeis")
}

/// Load `id` from the cache, fetching and caching it first when allowed.
pub fn fetch_bfile(id: SequenceId, cfg: &FetchConfig) -> Result<BFile> {
    let path = cfg.cache_path(id);
    match std::fs::read(&path) {
        Ok(bytes) => return parse_bfile(id, &bytes),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
        Err(e) => return Err(e.into()),
    }
    if cfg.offline {
        return Err(Error::CacheMissOffline(id.to_string()));
    }
    let bytes = download(id, cfg)?;
    let parsed = parse_bfile(id, &bytes)?;
    store_atomically(&cfg.cache_dir, &path, &bytes)?;
    Ok(parsed)
}

fn download(id: SequenceId, cfg: &FetchConfig) -> Result<Vec<u8>> {
    let network = |message: String| Error::Network { id: id.to_string(), message };
    let client =
        reqwest::blocking::Client::builder().timeout(cfg.timeout).build().map_err(|e| network(e.to_string()))?;
    let url = cfg.url(id);
    let mut last = String::new();
    for attempt in 0..=cfg.retries {
        if attempt > 0 {
            thread::sleep(Duration::from_millis(250 << attempt.min(4)));
        }
        match client.get(&url).send() {
            Ok(resp) if resp.status().is_success() => {
                return resp.bytes().map(|b| b.to_vec()).map_err(|e| network(e.to_string()));
            }
            // a 4xx will not improve on retry
            Ok(resp) if resp.status().is_client_error() => {
                return Err(network(format!("GET {url}: HTTP {}", resp.status())));
            }
            Ok(resp) => last = format!("GET {url}: HTTP {}", resp.status()),
            Err(e) => last = format!("GET {url}: {e}"),
        }
    }
    Err(network(last))
}

/// Write through a temp file in the same directory, then rename, so readers
/// never see a partial file.
fn store_atomically(dir: &Path, path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
