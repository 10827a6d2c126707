"""
Look up integer sequences in the OEIS, with an on-disk response cache.

The cache maps the query URL to the raw response body, one JSON file per
query under ``$RIORDANEMBED_OEIS_CACHE`` (default ``~/.cache/riordanembed/oeis``).
Nothing else in the package imports this module.
"""

import hashlib
import json
import os
import re
import tempfile
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .errors import MalformedResponse, NetworkUnavailable

URL_TEMPLATE = "https://oeis.org/search?q={terms}&fmt=json&start=0"
CACHE_ENV = "RIORDANEMBED_OEIS_CACHE"
TIMEOUT = 20

_ID = re.compile(r"A\d{6}")


@dataclass(frozen=True)
class SequenceQuery:
    terms: tuple
    max_results: int = 10

    def __init__(self, terms, max_results=10):
        terms = tuple(int(t) for t in terms)
        if not terms:
            raise ValueError("query needs at least one term")
        if max_results < 1:
            raise ValueError("max_results must be positive")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "max_results", max_results)

    def url(self):
        return URL_TEMPLATE.format(terms=urllib.parse.quote(",".join(map(str, self.terms)), safe=","))


@dataclass(frozen=True)
class LookupResult:
    id: str
    name: str
    matched_prefix_length: int

    def __post_init__(self):
        if not _ID.fullmatch(self.id):
            raise MalformedResponse("bad OEIS id %r" % self.id)


def cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "riordanembed" / "oeis"


def cache_key(url):
    return hashlib.sha256(url.encode("utf-8")).hexdigest()


def _read_cache(directory, url):
    path = directory / (cache_key(url) + ".json")
    if not path.exists():
        return None
    record = json.loads(path.read_text(encoding="utf-8"))
    return record["body"]


def _write_cache(directory, url, body):
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / (cache_key(url) + ".json")
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump({"url": url, "body": body}, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def http_get(url):
    req = urllib.request.Request(url, headers={"User-Agent": "riordanembed"})
    try:
        with urllib.request.urlopen(req, timeout=TIMEOUT) as resp:
            return resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkUnavailable("cannot reach %s: %s" % (url, exc)) from exc


def _matched_prefix(query, data):
    best = 0
    for start in range(len(data)):
        k = 0
        while k < len(query) and start + k < len(data) and data[start + k] == query[k]:
            k += 1
        best = max(best, k)
    return best


def parse_response(body, query):
    """Turn a raw OEIS JSON body into :class:`LookupResult` records."""
    try:
        doc = json.loads(body)
    except ValueError as exc:
        raise MalformedResponse("response is not JSON: %s" % exc) from exc
    if isinstance(doc, dict):
        entries = doc.get("results")
    else:
        entries = doc
    if entries is None:
        return []
    if not isinstance(entries, list):
        raise MalformedResponse("unexpected response shape")
    out = []
    for entry in entries[:query.max_results]:
        try:
            number = int(entry["number"])
            name = str(entry["name"])
            data = [int(v) for v in str(entry.get("data", "")).split(",") if v.strip()]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedResponse("bad entry in response: %r" % (entry,)) from exc
        out.append(LookupResult("A%06d" % number, name, _matched_prefix(list(query.terms), data)))
    return out


def lookup(query, offline=False, cache=None, fetch=http_get):
    """Search for ``query``; the cache is consulted before the network.

    ``offline=True`` never touches the network and raises
    :class:`NetworkUnavailable` on a cache miss.  An empty result is an
    empty list, not an error.
    """
    if not isinstance(query, SequenceQuery):
        query = SequenceQuery(query)
    directory = cache_dir() if cache is None else Path(cache)
    url = query.url()
    body = _read_cache(directory, url)
    if body is None:
        if offline:
            raise NetworkUnavailable("offline and no cached response for %s" % url)
        body = fetch(url)
        results = parse_response(body, query)   # validate before caching
        _write_cache(directory, url, body)
        return results
    return parse_response(body, query)
