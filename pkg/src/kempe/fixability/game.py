"""The board game: proving configurations reducible by Kempe-swap play.

Setup.  The pattern's edges start uncolored; each boundary slot shows
the color of its (already colored) outside edge.  We win a board
outright if the pattern extends to a proper 3-coloring.  Otherwise we
may *swap* at a slot ``i`` with a color pair ``q`` containing the slot's
seen color: in the host this walks the two-colored chain through the
outside edge and flips it.  The chain either ends before re-entering the
pattern (slot ``i`` alone toggles within ``q``) or re-enters at another
slot ``j`` whose seen color also lies in ``q`` (both toggle).  Which of
these happens is the adversary's choice, since the configuration says
nothing about the rest of the host.

This adversary is a superset of what real hosts can do (for instance it
also covers chains that would pass through a vertex carrying two slots),
so any strategy that beats it works in every host.  The flip side is
that boards no host can realize — two slots at one vertex showing the
same color — must still be won; none of the bundled patterns put two
slots on one vertex, so nothing is lost there.

Basic mode treats every swap independently.  Stateful mode remembers
what the adversary's answers reveal about the *current* pair's chain
structure: chains of a pair are fixed while only that pair is swapped,
so an answer "slot i was unpaired" or "slots i and j are paired" keeps
holding until we swap a different pair, at which point the memory is
discarded (and replaced by whatever the new answer reveals).  A
remembered fact forces the adversary's answer; remembered slots are
also excluded as partners for unknown slots, which can force an
"unpaired" answer indirectly when every other in-play slot is matched.

Both modes compute least fixpoints, so emitted strategies never cycle,
and every choice (move order, response order, state discovery) is
deterministic: reproving a configuration yields a byte-identical
certificate.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .._kernel import extend_colors
from ..graphs import COLOR_LETTERS, SizeError, ValidationError
from .boards import MAX_SLOTS, PAIR_NAMES, PAIRS, Board, canonicalize, enumerate_boards
from .configs import config_hash

MAX_PATTERN_EDGES = 20

#: Hard ceiling on explored (board, knowledge) states in stateful mode.
MAX_STATES = 2_000_000

CERTIFICATE_FORMAT = "fixability-certificate/1"


class VacuousMoveError(ValidationError):
    """Raised for a swap whose pair does not contain the slot's seen color."""


class Knowledge(NamedTuple):
    """What the adversary's answers have pinned down about one pair's chains.

    ``matched`` holds (i, j) slot pairs (i < j) known to share a chain;
    ``unpaired`` holds slots whose chains leave the pattern for good.
    Facts concern ``pair`` only and die when another pair is swapped.
    """

    pair: tuple
    matched: frozenset
    unpaired: frozenset

    def partner(self, i):
        for a, b in self.matched:
            if a == i:
                return b
            if b == i:
                return a
        return None

    @property
    def known_slots(self):
        out = set(self.unpaired)
        for a, b in self.matched:
            out.add(a)
            out.add(b)
        return out

    def to_json_dict(self):
        return {
            "pair": PAIR_NAMES[self.pair],
            "paired": sorted([a, b] for a, b in self.matched),
            "unpaired": sorted(self.unpaired),
        }


def _check_move(board, move):
    """Validate a (slot, pair) move; returns the normalized pair."""
    try:
        slot, pair = move
    except (TypeError, ValueError):
        raise ValidationError("moves are (slot, color_pair) tuples") from None
    if not (0 <= slot < len(board.seen)):
        raise ValidationError("slot %r out of range" % (slot,))
    pair = tuple(sorted(pair))
    if pair not in PAIRS:
        raise ValidationError("bad color pair %r" % (pair,))
    if board.seen[slot] not in pair:
        raise VacuousMoveError(
            "swap at slot %d with pair %s does not touch the slot's chain"
            % (slot, PAIR_NAMES[pair]))
    return slot, pair


def _toggle(c, pair):
    a, b = pair
    return b if c == a else (a if c == b else c)


def _in_play(seen, pair):
    return [j for j, c in enumerate(seen) if c in pair]


def _options(board, knowledge, move):
    """Adversary answers for a swap, as (kind, partner-or-None) in reply order.

    ``knowledge`` is the knowledge in force *before* the move; it only
    constrains the adversary while it concerns the move's own pair.
    """
    slot, pair = move
    effective = knowledge if knowledge is not None and knowledge.pair == pair else None
    if effective is not None:
        if slot in effective.unpaired:
            return [("unpaired", None)]
        partner = effective.partner(slot)
        if partner is not None:
            return [("paired", partner)]
        known = effective.known_slots
    else:
        known = ()
    out = [("unpaired", None)]
    for j in _in_play(board.seen, pair):
        if j != slot and j not in known:
            out.append(("paired", j))
    return out


def _apply(board, knowledge, move, option):
    """Board and knowledge after one swap and one adversary answer."""
    slot, pair = move
    kind, j = option
    seen = list(board.seen)
    seen[slot] = _toggle(seen[slot], pair)
    if kind == "paired":
        seen[j] = _toggle(seen[j], pair)
    effective = knowledge if knowledge is not None and knowledge.pair == pair else None
    matched = effective.matched if effective else frozenset()
    unpaired = effective.unpaired if effective else frozenset()
    if kind == "paired":
        matched = matched | {(min(slot, j), max(slot, j))}
    else:
        unpaired = unpaired | {slot}
    return Board(tuple(seen)), Knowledge(pair, matched, unpaired)


def _canon_state(board, knowledge):
    """Jointly canonicalize: the board's color relabeling renames the pair."""
    canon, perm = canonicalize(board)
    if knowledge is None:
        return canon, None
    pair = tuple(sorted((perm[knowledge.pair[0]], perm[knowledge.pair[1]])))
    return canon, Knowledge(pair, knowledge.matched, knowledge.unpaired)


def directly_colorable(cfg, board):
    """Extend the board to a proper 3-coloring of the pattern, if possible.

    Returns the pattern edge colors (indexed like ``cfg.pattern.edges``)
    or None.  Each slot is modeled as a pendant edge precolored with the
    slot's seen color, which is exactly the constraint the outside edge
    imposes.
    """
    pattern = cfg.pattern
    if len(board.seen) != len(cfg.boundary):
        raise ValidationError(
            "board has %d entries for %d slots"
            % (len(board.seen), len(cfg.boundary)))
    eu = [u for u, _ in pattern.edges]
    ev = [v for _, v in pattern.edges]
    fixed = [-1] * pattern.edge_count
    n = pattern.vertex_count
    for idx, (v, _slot) in enumerate(cfg.boundary):
        eu.append(v)
        ev.append(n + idx)
        fixed.append(board.seen[idx])
    result = extend_colors(3, n + len(cfg.boundary), eu, ev, fixed)
    if result is None:
        return None
    return tuple(result[:pattern.edge_count])


def adversary_responses(cfg, board, move):
    """All boards the adversary can leave after the given swap, canonicalized.

    The move must be non-vacuous (VacuousMoveError otherwise).  This is
    the memoryless adversary: every in-play slot other than the swapped
    one is a possible chain partner, plus the unpaired answer.
    """
    if len(board.seen) != len(cfg.boundary):
        raise ValidationError(
            "board has %d entries for %d slots"
            % (len(board.seen), len(cfg.boundary)))
    move = _check_move(board, move)
    out = set()
    for option in _options(board, None, move):
        after, _ = _apply(board, None, move, option)
        out.add(canonicalize(after)[0])
    return frozenset(out)


def _moves(seen):
    for slot in range(len(seen)):
        for pair in PAIRS:
            if seen[slot] in pair:
                yield slot, pair


def _require_provable(cfg):
    if cfg.free:
        raise ValidationError(
            "configurations with free vertices leave host degrees open "
            "and cannot be proven reducible")
    if cfg.slots == 0:
        raise ValidationError("configuration has no boundary slots")
    if cfg.slots > MAX_SLOTS:
        raise SizeError(
            "%d boundary slots exceed the supported maximum %d"
            % (cfg.slots, MAX_SLOTS))
    if cfg.pattern.edge_count > MAX_PATTERN_EDGES:
        raise SizeError(
            "%d pattern edges exceed the supported maximum %d"
            % (cfg.pattern.edge_count, MAX_PATTERN_EDGES))


def _color_action(cfg, coloring):
    edges = {}
    for (u, v), c in zip(cfg.pattern.edges, coloring):
        edges["%d-%d" % (u, v)] = COLOR_LETTERS[c]
    return {"type": "color", "edges": edges}


def _response_json(kind, j, target_board, target_knowledge):
    entry = {"kind": kind}
    if kind == "paired":
        entry["with"] = j
    entry["board"] = str(target_board)
    entry["knowledge"] = (None if target_knowledge is None
                          else target_knowledge.to_json_dict())
    return entry


def _swap_action(move, responses):
    slot, pair = move
    return {
        "type": "swap",
        "slot": slot,
        "pair": PAIR_NAMES[pair],
        "responses": responses,
    }


def _search_basic(cfg):
    """Memoryless fixpoint.  Returns (boards, actions) with one action
    dict per winnable canonical board."""
    boards = enumerate_boards(cfg.slots)
    actions = {}
    for board in boards:
        coloring = directly_colorable(cfg, board)
        if coloring is not None:
            actions[board] = _color_action(cfg, coloring)
    while True:
        new_wins = []
        for board in boards:
            if board in actions:
                continue
            for move in _moves(board.seen):
                responses = []
                all_won = True
                for kind, j in _options(board, None, move):
                    after, _ = _apply(board, None, move, (kind, j))
                    target = canonicalize(after)[0]
                    if target not in actions:
                        all_won = False
                        break
                    responses.append(_response_json(kind, j, target, None))
                if all_won:
                    new_wins.append((board, _swap_action(move, responses)))
                    break
        if not new_wins:
            return boards, actions
        for board, action in new_wins:
            actions[board] = action


def _search_stateful(cfg, boards, basic_actions):
    """Explore the knowledge-state graph from basic-losing boards.

    Returns (solved, order, keys, chosen) where ``order`` is discovery
    order of state indices, ``keys[i]`` the (board, knowledge) of state
    i, ``chosen[i]`` the winning action dict for solved states, and
    ``solved`` the set of solved indices.
    """
    basic_win = set(basic_actions)
    index = {}
    keys = []
    succ = []      # per state: list of (move, [(kind, j, tgt_idx_or_None, board, knowledge)])

    def intern(board, knowledge):
        key = (board, knowledge)
        idx = index.get(key)
        if idx is None:
            idx = len(keys)
            if idx >= MAX_STATES:
                raise SizeError(
                    "stateful search exceeded %d states" % MAX_STATES)
            index[key] = idx
            keys.append(key)
            succ.append(None)
            queue.append(idx)
        return idx

    queue = deque()
    roots = [board for board in boards if board not in basic_win]
    root_indices = [intern(board, None) for board in roots]

    while queue:
        idx = queue.popleft()
        board, knowledge = keys[idx]
        move_lists = []
        for move in _moves(board.seen):
            targets = []
            for kind, j in _options(board, knowledge, move):
                after, new_knowledge = _apply(board, knowledge, move, (kind, j))
                canon_board, canon_knowledge = _canon_state(after, new_knowledge)
                if canon_board in basic_win:
                    # Forget everything: the basic strategy finishes from here.
                    targets.append((kind, j, None, canon_board, None))
                else:
                    tgt = intern(canon_board, canon_knowledge)
                    targets.append((kind, j, tgt, canon_board, canon_knowledge))
            move_lists.append((move, targets))
        succ[idx] = move_lists

    # Least fixpoint by counter propagation, processed in rounds so that
    # each state records the first winning move at its earliest round.
    counters = []
    rev = [[] for _ in keys]          # target state -> [(state, move_pos)]
    solved_round = [None] * len(keys)
    chosen = [None] * len(keys)
    initial = []
    for idx, move_lists in enumerate(succ):
        state_counts = []
        for pos, (_move, targets) in enumerate(move_lists):
            count = 0
            for _kind, _j, tgt, _b, _k in targets:
                if tgt is not None:
                    count += 1
                    rev[tgt].append((idx, pos))
            state_counts.append(count)
            if count == 0:
                initial.append((idx, pos))
        counters.append(state_counts)

    frontier = {}
    for idx, pos in initial:
        best = frontier.get(idx)
        if best is None or pos < best:
            frontier[idx] = pos
    round_no = 1
    while frontier:
        bucket = sorted(frontier.items())
        frontier = {}
        for idx, pos in bucket:
            solved_round[idx] = round_no
            chosen[idx] = pos
        for idx, _pos in bucket:
            for state, move_pos in rev[idx]:
                if solved_round[state] is not None:
                    continue
                counters[state][move_pos] -= 1
                if counters[state][move_pos] == 0:
                    best = frontier.get(state)
                    if best is None or move_pos < best:
                        frontier[state] = move_pos
        round_no += 1

    solved = {idx for idx in range(len(keys)) if solved_round[idx] is not None}
    return solved, root_indices, keys, succ, chosen


def _stateful_entries(solved, root_indices, keys, succ, chosen):
    """Certificate entries for the winning strategy's reachable closure,
    in state discovery order.  Returns None if some root is unsolved."""
    for idx in root_indices:
        if idx not in solved:
            return None
    needed = set()
    stack = list(root_indices)
    while stack:
        idx = stack.pop()
        if idx in needed:
            continue
        needed.add(idx)
        _move, targets = succ[idx][chosen[idx]]
        for _kind, _j, tgt, _b, _k in targets:
            if tgt is not None and tgt not in needed:
                stack.append(tgt)
    entries = []
    for idx in sorted(needed):
        board, knowledge = keys[idx]
        move, targets = succ[idx][chosen[idx]]
        responses = [_response_json(kind, j, b, k)
                     for kind, j, _tgt, b, k in targets]
        entries.append({
            "board": str(board),
            "knowledge": None if knowledge is None else knowledge.to_json_dict(),
            "action": _swap_action(move, responses),
        })
    return entries


@dataclass(frozen=True)
class StrategyCertificate:
    """A replayable winning strategy; the payload is its JSON document.

    Treat instances as immutable: the payload dict must not be mutated.
    """

    payload: dict

    @property
    def mode(self):
        return self.payload.get("mode")

    @property
    def config_hash(self):
        return self.payload.get("config_hash")

    @property
    def slots(self):
        return self.payload.get("slots")

    @property
    def boards(self):
        return self.payload.get("boards", [])

    def to_json(self, indent=None):
        if indent is None:
            return json.dumps(self.payload, sort_keys=True, separators=(",", ":"))
        return json.dumps(self.payload, sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        if not isinstance(payload, dict):
            raise ValidationError("certificate JSON must be an object")
        return cls(payload)


def prove_reducible(cfg, mode="basic"):
    """Search for a winning strategy on every board of the configuration.

    Returns a StrategyCertificate, or None when the requested mode finds
    no strategy.  ``mode`` is "basic" (memoryless) or "stateful"
    (remembers single-pair chain facts between swaps).
    """
    if mode not in ("basic", "stateful"):
        raise ValidationError("mode must be 'basic' or 'stateful'")
    _require_provable(cfg)
    boards, basic_actions = _search_basic(cfg)

    entries = [{"board": str(board), "knowledge": None, "action": basic_actions[board]}
               for board in boards if board in basic_actions]
    if mode == "basic":
        if len(basic_actions) < len(boards):
            return None
    else:
        solved, roots, keys, succ, chosen = _search_stateful(cfg, boards, basic_actions)
        extra = _stateful_entries(solved, roots, keys, succ, chosen)
        if extra is None:
            return None
        entries.extend(extra)

    payload = {
        "format": CERTIFICATE_FORMAT,
        "config_hash": config_hash(cfg),
        "mode": mode,
        "slots": cfg.slots,
        "boards": entries,
    }
    return StrategyCertificate(payload)


def losing_boards(cfg, mode="basic"):
    """Canonical boards the requested mode cannot win, in board order.

    Empty exactly when prove_reducible(cfg, mode) succeeds; useful for
    seeing how close a configuration is to reducible.
    """
    if mode not in ("basic", "stateful"):
        raise ValidationError("mode must be 'basic' or 'stateful'")
    _require_provable(cfg)
    boards, basic_actions = _search_basic(cfg)
    if mode == "basic":
        return tuple(b for b in boards if b not in basic_actions)
    solved, roots, keys, _succ, _chosen = _search_stateful(cfg, boards, basic_actions)
    losing = {keys[idx][0] for idx in roots if idx not in solved}
    return tuple(b for b in boards if b in losing)
