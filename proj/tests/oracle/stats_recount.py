# Copyright 2026 The sarct Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force recount of `stats` output, written independently of the C++
implementation so the two can check each other.

Usage: stats_recount.py <cli-binary> <data-dir>
"""

import json
import subprocess
import sys

CONTRACTION_SUFFIXES = ("'s", "'m", "'d", "'ll", "'re", "'ve")


def is_word_byte(b):
    if b >= 0x80:
        return True
    return chr(b).isalnum()


def split_contractions(word):
    lower = word.lower()
    if len(lower) > 3 and lower.endswith("n't"):
        return [word[:-3], word[-3:]]
    for suf in CONTRACTION_SUFFIXES:
        if len(lower) > len(suf) and lower.endswith(suf):
            return [word[: -len(suf)], word[-len(suf):]]
    if len(word) > 1 and word.endswith("'"):
        return [word[:-1], "'"]
    return [word]


def tokenize(text):
    data = text.encode("utf-8")
    tokens = []
    i, n = 0, len(data)
    while i < n:
        b = data[i]
        if b < 0x80 and chr(b).isspace():
            i += 1
            continue
        if is_word_byte(b):
            start = i
            while i < n:
                cur = data[i]
                if is_word_byte(cur):
                    i += 1
                    continue
                if (
                    cur in (ord("-"), ord("'"))
                    and i > start
                    and i + 1 < n
                    and is_word_byte(data[i + 1])
                ):
                    i += 1
                    continue
                break
            tokens.extend(split_contractions(data[start:i].decode("utf-8")))
            continue
        if b == ord("."):
            start = i
            while i < n and data[i] == ord("."):
                i += 1
            tokens.append(data[start:i].decode("utf-8"))
            continue
        tokens.append(chr(b))
        i += 1
    return tokens


def fold(word):
    return "".join(c.lower() if ord(c) < 0x80 else c for c in word)


def load_lexicon(path):
    lex = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\r\n")
            if not line or line.startswith("#"):
                continue
            word, score = line.split("\t")
            lex[fold(word)] = float(score)
    return lex


def load_corpus(path):
    docs = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\r\n")
            if not line or line.startswith("#"):
                continue
            doc_id, text, target = line.split("\t")
            if target == "OUTSIDE":
                docs.append((doc_id, text, None))
            else:
                docs.append((doc_id, text, target.split("|")))
    return docs


def recount(docs, lex):
    count = len(docs)
    total_words = 0
    vocabulary = set()
    outside_count = 0
    target_lengths = []
    target_strengths = []
    rest_strengths = []

    for _, text, gold in docs:
        tokens = [fold(t) for t in tokenize(text)]
        total_words += len(tokens)
        vocabulary.update(tokens)

        remaining = [fold(w) for w in (gold or [])]
        target_strength = 0.0
        rest_strength = 0.0
        for token in tokens:
            polarity = abs(lex.get(token, 0.0))
            if token in remaining:
                remaining.remove(token)
                target_strength += polarity
            else:
                rest_strength += polarity
        rest_strengths.append(rest_strength)
        if gold is None:
            outside_count += 1
        else:
            target_lengths.append(len(gold))
            target_strengths.append(target_strength)

    stats = {
        "count": count,
        "average_words": total_words / count,
        "vocabulary": len(vocabulary),
        "total_words": total_words,
        "outside_count": outside_count,
        "average_rest_polarity_strength": sum(rest_strengths) / count,
    }
    if target_lengths:
        stats["average_target_length"] = sum(target_lengths) / len(
            target_lengths
        )
        stats["average_target_polarity_strength"] = sum(
            target_strengths
        ) / len(target_strengths)
    return stats


def main():
    if len(sys.argv) != 3:
        print("usage: stats_recount.py <cli-binary> <data-dir>")
        return 2
    cli, data_dir = sys.argv[1], sys.argv[2]
    corpus_path = data_dir + "/fixture_corpus.tsv"

    proc = subprocess.run(
        [
            cli,
            "stats",
            "--corpus",
            corpus_path,
            "--data-dir",
            data_dir,
            "--format",
            "records",
        ],
        capture_output=True,
        text=True,
        check=False,
    )
    if proc.returncode != 0:
        print("stats invocation failed:", proc.stderr.strip())
        return 1
    reported = json.loads(proc.stdout.strip())

    expected = recount(
        load_corpus(corpus_path),
        load_lexicon(data_dir + "/sentiment_lexicon.tsv"),
    )

    exact_fields = ["count", "vocabulary", "total_words", "outside_count"]
    mean_fields = [
        "average_words",
        "average_target_length",
        "average_target_polarity_strength",
        "average_rest_polarity_strength",
    ]

    failures = []
    for field in exact_fields:
        if reported.get(field) != expected[field]:
            failures.append(
                f"{field}: reported {reported.get(field)} != recount "
                f"{expected[field]}"
            )
    for field in mean_fields:
        if field not in expected:
            continue
        got = reported.get(field)
        if got is None or abs(got - expected[field]) > 1e-9:
            failures.append(
                f"{field}: reported {got} != recount {expected[field]}"
            )

    if failures:
        print("recount mismatch:")
        for failure in failures:
            print(" ", failure)
        return 1
    print("recount matches on", len(exact_fields) + len(mean_fields), "fields")
    return 0


if __name__ == "__main__":
    sys.exit(main())
