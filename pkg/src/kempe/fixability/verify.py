"""Independent replay checker for strategy certificates.

This module deliberately re-derives everything it checks — canonical
board enumeration, adversary options, color-renaming — instead of
calling the search code in :mod:`.game`.  A bug in the search then
shows up as a verification failure rather than being reproduced here.

What is checked, per certificate:

* structural sanity: format tag, mode, slot count, configuration hash;
* coverage: every canonical board has a knowledge-free entry;
* color actions really are proper 3-colorings of the whole pattern that
  avoid each slot's seen color at the slot's vertex;
* swap actions are non-vacuous and list exactly the adversary's legal
  answers given the entry's knowledge, each with the correctly updated
  (and canonicalized) board and knowledge;
* every answer points at another certificate entry — either the exact
  updated knowledge, or knowledge ``null``, which is always sound
  because forgetting facts only enlarges the adversary's options;
* the pointer graph is acyclic, so replay always reaches a coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configs import config_hash

_FORMAT = "fixability-certificate/1"
_LETTERS = "XYZ"
_PAIR_NAMES = ("xy", "xz", "yz")
_PAIR_OF = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a certificate check; falsy when verification failed."""

    ok: bool
    problem: str = None
    entry: str = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "certificate verified"
        if self.entry is None:
            return "certificate rejected: %s" % self.problem
        return "certificate rejected at %s: %s" % (self.entry, self.problem)


def _fail(problem, entry=None):
    return VerificationResult(False, problem, entry)


def _canonical_boards(slots):
    """All canonical boards as strings, re-derived from first principles."""
    out = []

    def grow(prefix, high):
        if len(prefix) == slots:
            out.append(prefix)
            return
        for c in range(min(high + 2, 3)):
            grow(prefix + _LETTERS[c], max(high, c))

    grow("X", 0)
    return out


def _canonize(seen):
    """First-occurrence color relabeling; returns (string, perm)."""
    perm = [None, None, None]
    nxt = 0
    for c in seen:
        if perm[c] is None:
            perm[c] = nxt
            nxt += 1
    for c in range(3):
        if perm[c] is None:
            perm[c] = nxt
            nxt += 1
    return "".join(_LETTERS[perm[c]] for c in seen), perm


def _parse_board(text, slots):
    if not isinstance(text, str) or len(text) != slots:
        return None
    seen = []
    for ch in text:
        idx = _LETTERS.find(ch)
        if idx < 0:
            return None
        seen.append(idx)
    return seen


def _knowledge_key(obj, slots, seen):
    """Validate a knowledge JSON value; returns (key, error).

    The key is None for null knowledge, else a hashable normal form.
    ``seen`` is the entry's board, used to insist facts concern in-play
    slots only.
    """
    if obj is None:
        return None, None
    if not isinstance(obj, dict):
        return None, "knowledge must be null or an object"
    extra = set(obj) - {"pair", "paired", "unpaired"}
    if extra:
        return None, "unknown knowledge fields %s" % sorted(extra)
    pair_name = obj.get("pair")
    if pair_name not in _PAIR_OF:
        return None, "bad knowledge pair %r" % (pair_name,)
    pair = _PAIR_OF[pair_name]
    used = set()
    matched = []
    for item in obj.get("paired", ()):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            return None, "paired facts must be [i, j] slot pairs"
        a, b = item
        if not (0 <= a < b < slots):
            return None, "paired fact %r out of order or range" % (item,)
        if a in used or b in used:
            return None, "slot appears in two knowledge facts"
        used.update((a, b))
        matched.append((a, b))
    unpaired = []
    for x in obj.get("unpaired", ()):
        if not isinstance(x, int) or not (0 <= x < slots):
            return None, "bad unpaired slot %r" % (x,)
        if x in used:
            return None, "slot appears in two knowledge facts"
        used.add(x)
        unpaired.append(x)
    if not used:
        return None, "factless knowledge must be encoded as null"
    for x in used:
        if seen[x] not in pair:
            return None, "knowledge about slot %d, which is not in play for %s" % (x, pair_name)
    if matched != sorted(matched) or unpaired != sorted(unpaired):
        return None, "knowledge facts must be listed in sorted order"
    return ("K", pair, tuple(sorted(matched)), tuple(sorted(unpaired))), None


def _legal_answers(seen, know_key, slot, pair):
    """The adversary's answer set as (kind, partner) tuples.

    ``know_key`` is the entry's normalized knowledge; it binds only if
    it concerns the swapped pair.
    """
    matched, unpaired = (), ()
    if know_key is not None and know_key[1] == pair:
        matched, unpaired = know_key[2], know_key[3]
    if slot in unpaired:
        return [("unpaired", None)]
    for a, b in matched:
        if slot == a:
            return [("paired", b)]
        if slot == b:
            return [("paired", a)]
    known = set(unpaired)
    for a, b in matched:
        known.update((a, b))
    answers = [("unpaired", None)]
    for j, c in enumerate(seen):
        if j != slot and j not in known and c in pair:
            answers.append(("paired", j))
    return answers


def _updated_state(seen, know_key, slot, pair, kind, j):
    """Board and knowledge after one answer, jointly canonicalized.

    Returns (board string, knowledge key with renamed pair).
    """
    a, b = pair
    after = list(seen)
    after[slot] = b if after[slot] == a else a
    if kind == "paired":
        after[j] = b if after[j] == a else a
    if know_key is not None and know_key[1] == pair:
        matched, unpaired = set(know_key[2]), set(know_key[3])
    else:
        matched, unpaired = set(), set()
    if kind == "paired":
        matched.add((min(slot, j), max(slot, j)))
    else:
        unpaired.add(slot)
    board, perm = _canonize(after)
    new_pair = tuple(sorted((perm[a], perm[b])))
    return board, ("K", new_pair, tuple(sorted(matched)), tuple(sorted(unpaired)))


def _check_color_action(cfg, seen, action, where):
    edges = action.get("edges")
    if not isinstance(edges, dict):
        return _fail("color action without an edges object", where)
    expected = {"%d-%d" % e for e in cfg.pattern.edges}
    if set(edges) != expected:
        missing = sorted(expected - set(edges))
        surplus = sorted(set(edges) - expected)
        return _fail("colored edges do not match the pattern "
                     "(missing %s, surplus %s)" % (missing, surplus), where)
    used = {}
    for v, _ in cfg.boundary:
        used.setdefault(v, [])
    for idx, (v, _) in enumerate(cfg.boundary):
        used[v].append(seen[idx])
    for key, letter in edges.items():
        color = "xyz".find(letter) if isinstance(letter, str) else -1
        if color < 0 or (isinstance(letter, str) and len(letter) != 1):
            return _fail("bad edge color %r" % (letter,), where)
        u, v = (int(part) for part in key.split("-"))
        used.setdefault(u, []).append(color)
        used.setdefault(v, []).append(color)
    for v, colors in used.items():
        if len(colors) != len(set(colors)):
            return _fail("coloring repeats a color at vertex %d" % v, where)
    return VerificationResult(True)


def verify_certificate(cfg, cert):
    """Replay-check a StrategyCertificate (or raw payload dict) against cfg."""
    payload = getattr(cert, "payload", cert)
    if not isinstance(payload, dict):
        return _fail("certificate payload is not an object")
    if payload.get("format") != _FORMAT:
        return _fail("unknown certificate format %r" % (payload.get("format"),))
    mode = payload.get("mode")
    if mode not in ("basic", "stateful"):
        return _fail("unknown mode %r" % (mode,))
    slots = len(cfg.boundary)
    if payload.get("slots") != slots:
        return _fail("certificate is for %r slots, configuration has %d"
                     % (payload.get("slots"), slots))
    expected_hash = config_hash(cfg)
    if payload.get("config_hash") != expected_hash:
        return _fail("configuration hash mismatch (certificate %r, expected %r)"
                     % (payload.get("config_hash"), expected_hash))
    if slots == 0:
        return _fail("configuration has no boundary slots")
    if slots > 8:
        return _fail("%d slots exceed the supported maximum 8" % slots)
    raw_entries = payload.get("boards")
    if not isinstance(raw_entries, list):
        return _fail("certificate boards must be a list")

    entries = {}
    parsed = []
    for pos, entry in enumerate(raw_entries):
        where = "boards[%d]" % pos
        if not isinstance(entry, dict):
            return _fail("entry is not an object", where)
        seen = _parse_board(entry.get("board"), slots)
        if seen is None:
            return _fail("bad board %r" % (entry.get("board"),), where)
        know_key, err = _knowledge_key(entry.get("knowledge"), slots, seen)
        if err:
            return _fail(err, where)
        if mode == "basic" and know_key is not None:
            return _fail("basic certificates must not carry knowledge", where)
        key = (entry.get("board"), know_key)
        if key in entries:
            return _fail("duplicate entry for board %s" % entry.get("board"), where)
        entries[key] = pos
        parsed.append((key, seen, know_key, entry))

    for board in _canonical_boards(slots):
        if (board, None) not in entries:
            return _fail("no entry for canonical board %s" % board)

    # successors[key] -> pointer keys, for the acyclicity pass
    successors = {}
    for key, seen, know_key, entry in parsed:
        where = "board %s / knowledge %s" % (entry["board"], entry.get("knowledge"))
        action = entry.get("action")
        if not isinstance(action, dict):
            return _fail("entry without an action object", where)
        kind = action.get("type")
        if kind == "color":
            result = _check_color_action(cfg, seen, action, where)
            if not result:
                return result
            successors[key] = ()
            continue
        if kind != "swap":
            return _fail("unknown action type %r" % (kind,), where)
        slot = action.get("slot")
        pair = _PAIR_OF.get(action.get("pair"))
        if not isinstance(slot, int) or not (0 <= slot < slots) or pair is None:
            return _fail("bad swap move %r / %r"
                         % (action.get("slot"), action.get("pair")), where)
        if seen[slot] not in pair:
            return _fail("vacuous swap: slot %d does not see a %s color"
                         % (slot, action.get("pair")), where)
        responses = action.get("responses")
        if not isinstance(responses, list) or not responses:
            return _fail("swap action without responses", where)
        legal = _legal_answers(seen, know_key, slot, pair)
        recorded = []
        for response in responses:
            if not isinstance(response, dict):
                return _fail("response is not an object", where)
            rkind = response.get("kind")
            if rkind == "unpaired":
                answer = ("unpaired", None)
            elif rkind == "paired":
                answer = ("paired", response.get("with"))
            else:
                return _fail("unknown response kind %r" % (rkind,), where)
            recorded.append((answer, response))
        if [r[0] for r in recorded] != sorted(set(r[0] for r in recorded),
                                              key=lambda t: (t[0] != "unpaired",
                                                             -1 if t[1] is None else t[1])):
            return _fail("responses must be unique and in canonical order "
                         "(unpaired first, partners ascending)", where)
        if set(r[0] for r in recorded) != set(legal):
            return _fail("responses do not match the adversary's options "
                         "(recorded %s, legal %s)"
                         % (sorted(set(r[0] for r in recorded)), sorted(legal)),
                         where)
        pointers = []
        for answer, response in recorded:
            target_board, target_know = _updated_state(
                seen, know_key, slot, pair, answer[0], answer[1])
            if response.get("board") != target_board:
                return _fail("response %s lands on %s, recorded %r"
                             % (answer, target_board, response.get("board")), where)
            rseen = _parse_board(target_board, slots)
            recorded_know, err = _knowledge_key(response.get("knowledge"), slots, rseen)
            if err:
                return _fail("response %s: %s" % (answer, err), where)
            if recorded_know is not None and recorded_know != target_know:
                return _fail("response %s carries wrong knowledge" % (answer,), where)
            # null knowledge is always allowed: forgetting facts only
            # hands the adversary more options, so the pointed-to
            # strategy still covers everything that can happen.
            pointer = (target_board, recorded_know)
            if pointer not in entries:
                return _fail("response %s points at missing entry %s / %s"
                             % (answer, target_board, response.get("knowledge")),
                             where)
            pointers.append(pointer)
        successors[key] = tuple(pointers)

    # Acyclic pointer graph => replay terminates at a coloring.
    WHITE, GRAY, BLACK = 0, 1, 2
    state = {key: WHITE for key in successors}
    for start in successors:
        if state[start] != WHITE:
            continue
        stack = [(start, iter(successors[start]))]
        state[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == GRAY:
                    return _fail("strategy cycles through board %s" % (nxt[0],))
                if state[nxt] == WHITE:
                    state[nxt] = GRAY
                    stack.append((nxt, iter(successors[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = BLACK
                stack.pop()
    return VerificationResult(True)
