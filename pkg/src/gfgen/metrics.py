"""Sentence-level BLEU-3 and ROUGE-1/2/L scores, scaled to [0, 100].

BLEU-3 is the geometric mean of clipped 1/2/3-gram precisions with equal
weights and the standard brevity penalty; a sentence is BLEU-assessable only
when all three precisions are nonzero.  ROUGE-N is the F1 of clipped n-gram
overlap and ROUGE-L the F1 over the longest common subsequence.
"""

import math
from collections import Counter

STRIP_CHARS = ".,;:!?()[]{}\"'"


def tokenize(text):
    """Scoring tokenization: lowercase, whitespace split, punctuation stripped."""
    tokens = []
    for raw in text.lower().split():
        tok = raw.strip(STRIP_CHARS)
        if tok:
            tokens.append(tok)
    return tokens


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _precision(hyp_tokens, ref_tokens, n):
    hyp = _ngrams(hyp_tokens, n)
    if not hyp:
        return 0.0
    ref = _ngrams(ref_tokens, n)
    clipped = sum(min(count, ref[gram]) for gram, count in hyp.items())
    return clipped / sum(hyp.values())


def bleu3(hypothesis, reference):
    """BLEU-3 with weights (1/3, 1/3, 1/3); 0.0 when any precision is zero."""
    precisions = [_precision(hypothesis, reference, n) for n in (1, 2, 3)]
    if any(p == 0.0 for p in precisions):
        return 0.0
    c, r = len(hypothesis), len(reference)
    bp = 1.0 if c >= r else math.exp(1.0 - r / c)
    return 100.0 * bp * math.exp(sum(math.log(p) for p in precisions) / 3.0)


def is_bleu_assessable(hypothesis, reference):
    return all(_precision(hypothesis, reference, n) > 0.0 for n in (1, 2, 3))


def _f1(precision, recall):
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _rouge_n(hypothesis, reference, n):
    hyp = _ngrams(hypothesis, n)
    ref = _ngrams(reference, n)
    if not hyp or not ref:
        return 0.0
    overlap = sum(min(count, hyp[gram]) for gram, count in ref.items())
    return _f1(overlap / sum(hyp.values()), overlap / sum(ref.values()))


def _lcs_length(a, b):
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(cur[-1], prev[j]))
        prev = cur
    return prev[-1]


def _rouge_l(hypothesis, reference):
    if not hypothesis or not reference:
        return 0.0
    lcs = _lcs_length(hypothesis, reference)
    return _f1(lcs / len(hypothesis), lcs / len(reference))


def rouge(hypothesis, reference):
    """(ROUGE-1, ROUGE-2, ROUGE-L) F1 scores."""
    return (
        100.0 * _rouge_n(hypothesis, reference, 1),
        100.0 * _rouge_n(hypothesis, reference, 2),
        100.0 * _rouge_l(hypothesis, reference),
    )
