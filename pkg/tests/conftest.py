import io
import random

import pytest

from lexirank.agreement import CoincidenceMatrix
from lexirank.corpus import AnnotatedText, SentimentLabel, write_corpus

# codepoints from the bundled So table, a mix of BMP and supplementary
EMOJI_POOL = (
    0x2600, 0x2601, 0x2614, 0x26A1, 0x2708, 0x2764,
    0x1F600, 0x1F601, 0x1F62D, 0x1F494, 0x1F37A, 0x1F4A9,
)

WORDS = ("sun", "rain", "game", "vote", "news", "lol", "meh", "sad", "great", "bad")


def make_record(text_id="t1", language="en", annotator="a1", label=1, text="hello"):
    return AnnotatedText(text_id, language, annotator, SentimentLabel(label), text)


def synthetic_corpus(n_rows=1000, seed=0, languages=("en", "es", "de"),
                     annotators=("a1", "a2", "a3", "a4"), twice_fraction=0.0):
    """Deterministic random corpus; symbol use loosely follows the label."""
    rng = random.Random(seed)
    records = []
    for i in range(n_rows):
        label = rng.choice((-1, 0, 1))
        tokens = [rng.choice(WORDS) for _ in range(rng.randint(2, 8))]
        for _ in range(rng.randint(0, 3)):
            # positive texts pull from the front of the pool, negative from the back
            bucket = EMOJI_POOL[:6] if label > 0 else EMOJI_POOL[6:] if label < 0 else EMOJI_POOL
            tokens.insert(rng.randrange(len(tokens) + 1), chr(rng.choice(bucket)))
        records.append(
            AnnotatedText(
                text_id=f"t{i}",
                language=rng.choice(languages),
                annotator_id=rng.choice(annotators),
                label=SentimentLabel(label),
                text=" ".join(tokens),
            )
        )
    if twice_fraction:
        for i, record in enumerate(records):
            if rng.random() < twice_fraction:
                second = rng.choice(annotators)
                relabel = rng.choice((record.label, rng.choice((-1, 0, 1))))
                records.append(
                    AnnotatedText(record.text_id, record.language, second,
                                  SentimentLabel(relabel), record.text)
                )
    return records


def corpus_csv_bytes(records) -> bytes:
    buf = io.BytesIO()
    write_corpus(records, buf)
    return buf.getvalue()


def write_corpus_file(path, records):
    path.write_bytes(corpus_csv_bytes(records))
    return path


@pytest.fixture
def matrix_with_symbols():
    """Published inter-annotator coincidence matrix, texts with symbols."""
    return CoincidenceMatrix.from_rows(
        [[1070, 354, 196], [354, 902, 725], [196, 725, 2572]]
    )


@pytest.fixture
def matrix_without_symbols():
    """Published inter-annotator coincidence matrix, texts without symbols."""
    return CoincidenceMatrix.from_rows(
        [[15356, 7777, 3004], [7777, 23670, 10921], [3004, 10921, 21624]]
    )
