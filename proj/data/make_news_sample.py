#!/usr/bin/env python3
"""Regenerates news_sample.csv and xrp_usd_sample.csv.

The articles are synthetic: sentences are drawn from small themed vocabularies
so that article volume spikes and topic shifts land on known dates. Output is
deterministic for a given seed.
"""

import argparse
import csv
import datetime as dt
import random

BACKGROUND = (
    "government minister parliament talks negotiations european union market "
    "pound sterling investors economy trade business uk britain prime london "
    "brussels officials week report analysts growth policy"
).split()

THEMES = {
    "referendum": "referendum vote leave remain ballot campaign result polls voters count".split(),
    "article50": "article fifty trigger notice court supreme appeal judges ruling".split(),
    "withdrawal": "withdrawal agreement bill deal draft text summit endorse leaders".split(),
    "delay": "delay meaningful vote theresa postpone commons defeat extension".split(),
    "confidence": "confidence motion opposition corbyn theresa defeat deal commons".split(),
}

# (date, theme, extra articles on the day, half-width of the build-up in weekdays)
EPISODES = [
    (dt.date(2016, 6, 23), "referendum", 14, 4),
    (dt.date(2016, 6, 24), "referendum", 20, 0),
    (dt.date(2016, 6, 25), "referendum", 22, 0),
    (dt.date(2016, 6, 27), "referendum", 12, 0),
    (dt.date(2016, 10, 7), "article50", 10, 3),
    (dt.date(2017, 1, 24), "article50", 9, 3),
    (dt.date(2017, 7, 13), "withdrawal", 8, 3),
    (dt.date(2018, 11, 29), "withdrawal", 11, 3),
    (dt.date(2018, 12, 11), "delay", 13, 3),
    (dt.date(2019, 1, 16), "confidence", 15, 3),
    (dt.date(2019, 3, 21), "delay", 12, 3),
]

SOURCES = ["https://news.example.org", "https://www.example-times.co.uk", "https://wire.example.com"]
MARKER = "Read more:"


def sentence(rng, theme_words, theme_share):
    words = []
    for _ in range(rng.randint(8, 14)):
        if theme_words and rng.random() < theme_share:
            words.append(rng.choice(theme_words))
        else:
            words.append(rng.choice(BACKGROUND))
    if rng.random() < 0.5:
        words.insert(rng.randrange(len(words)), "brexit")
    if rng.random() < 0.2:
        words.append(str(rng.randint(2, 99)))
    text = " ".join(words)
    return text[0].upper() + text[1:] + rng.choice([".", ".", "!", ","])


def article(rng, theme):
    theme_words = THEMES.get(theme, [])
    share = 0.45 if theme_words else 0.0
    body = " ".join(sentence(rng, theme_words, share) for _ in range(rng.randint(3, 6)))
    return body + f" {MARKER} related coverage subscribe newsletter"


def weekdays_between(a, b):
    n = 0
    d = min(a, b)
    while d < max(a, b):
        d += dt.timedelta(days=1)
        if d.weekday() < 5:
            n += 1
    return n


def build_news(rng, start, end):
    rows = []
    serial = 0
    day = start
    while day <= end:
        theme = None
        extra = 0
        for date, name, count, width in EPISODES:
            if day == date:
                theme, extra = name, count
            elif width and abs((day - date).days) <= 10 and weekdays_between(day, date) <= width:
                theme = theme or name
                extra = max(extra, count // (2 + weekdays_between(day, date)))
        base = rng.choice([0, 1, 1, 1, 2, 2]) if day.weekday() < 5 else rng.choice([0, 0, 1])
        for _ in range(base + extra):
            serial += 1
            url = f"{rng.choice(SOURCES)}/{day:%Y/%m/%d}/politics/story-{serial}"
            rows.append((day.strftime("%d/%m/%Y"), article(rng, theme if extra else None), "", url))
        day += dt.timedelta(days=1)
    return rows


def build_xrp(rng, start, end):
    rows = []
    level = 0.0065
    day = start
    while day <= end:
        if day.weekday() < 5:
            level *= 1.0 + rng.gauss(0.002, 0.05)
            rows.append((day.strftime("%d/%m/%Y"), f"{level:.6f}"))
        day += dt.timedelta(days=1)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2016)
    parser.add_argument("--news", default="news_sample.csv")
    parser.add_argument("--xrp", default="xrp_usd_sample.csv")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    news = build_news(rng, dt.date(2016, 1, 1), dt.date(2019, 4, 19))
    with open(args.news, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["Date", "Article", "Tokens", "Source"])
        w.writerows(news)

    xrp = build_xrp(rng, dt.date(2017, 1, 2), dt.date(2019, 4, 19))
    with open(args.xrp, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["Date", "Mid"])
        w.writerows(xrp)


if __name__ == "__main__":
    main()
