#!/usr/bin/env python3
# Copyright 2026 The kappanet Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the network files under networks/.

Usage: tools/make_corpus.py [OUTPUT_DIR]

The output is laid out the way the library serializes networks, so a
load/save cycle reproduces each file byte for byte.
"""

import itertools
import json
import pathlib
import sys

TF = ["true", "false"]


def binary_row(p_first):
    return [p_first, 1.0 - p_first]


def document(variables, tables):
    return {
        "calculus": "probability",
        "variables": [{"name": n, "values": v} for n, v in variables],
        "tables": tables,
    }


def table(child, parents, domains, row_fn):
    rows = []
    for key in itertools.product(*(domains[p] for p in parents)):
        rows.append({"parents": list(key), "degrees": row_fn(*key)})
    return {"child": child, "parents": parents, "rows": rows}


def chain(length, prior=0.5, persistence=0.8, innovation=0.2):
    names = [f"X{i}" for i in range(1, length + 1)]
    domains = {n: TF for n in names}
    tables = [table(names[0], [], domains, lambda: binary_row(prior))]
    for prev, cur in zip(names, names[1:]):
        tables.append(table(
            cur, [prev], domains,
            lambda v: binary_row(persistence if v == "true" else innovation)))
    return document([(n, TF) for n in names], tables)


def fork(effects, prior=0.04, given_cause=0.8, given_absence=0.2):
    names = ["Y"] + [f"X{i}" for i in range(1, effects + 1)]
    domains = {n: TF for n in names}
    tables = [table("Y", [], domains, lambda: binary_row(prior))]
    for n in names[1:]:
        tables.append(table(
            n, ["Y"], domains,
            lambda y: binary_row(given_cause if y == "true" else given_absence)))
    return document([(n, TF) for n in names], tables)


# Car diagnosis network. The structure follows the usual starting-system
# example; every number below is our own choice.
CAR_VARIABLES = [
    ("Alternator", ["ok", "faulty"]),
    ("Battery", ["ok", "faulty"]),
    ("FuelPump", ["ok", "faulty"]),
    ("Gas", ["not-empty", "empty"]),
    ("Plugs", ["ok", "faulty"]),
    ("Starter", ["ok", "faulty"]),
    ("ChargeDelivered", ["yes", "no"]),
    ("BatteryPower", ["yes", "no"]),
    ("Lights", ["work", "dont"]),
    ("Radio", ["works", "dont"]),
    ("GasGauge", ["not-empty", "empty"]),
    ("EngineTurnOver", ["yes", "no"]),
    ("EngineStart", ["yes", "no"]),
]

CAR_PRIORS = {
    "Alternator": 0.03,
    "Battery": 0.04,
    "FuelPump": 0.02,
    "Gas": 0.15,
    "Plugs": 0.05,
    "Starter": 0.008,
}


def car():
    domains = dict(CAR_VARIABLES)
    tables = []
    for name, p in CAR_PRIORS.items():
        tables.append(table(name, [], domains, lambda p=p: binary_row(1.0 - p)))

    tables.append(table(
        "ChargeDelivered", ["Alternator"], domains,
        lambda a: binary_row(0.96 if a == "ok" else 0.04)))

    def battery_power(battery, charge):
        if battery == "faulty":
            return binary_row(0.008)
        return binary_row(0.992 if charge == "yes" else 0.2)

    tables.append(table("BatteryPower", ["Battery", "ChargeDelivered"],
                        domains, battery_power))
    tables.append(table("Lights", ["BatteryPower"], domains,
                        lambda bp: binary_row(0.96 if bp == "yes" else 0.008)))
    tables.append(table("Radio", ["BatteryPower"], domains,
                        lambda bp: binary_row(0.96 if bp == "yes" else 0.04)))

    def gas_gauge(gas, bp):
        if bp == "no":
            return binary_row(0.2)
        return binary_row(0.96 if gas == "not-empty" else 0.04)

    tables.append(table("GasGauge", ["Gas", "BatteryPower"], domains,
                        gas_gauge))

    def turn_over(bp, starter):
        if bp == "no":
            return binary_row(0.008)
        return binary_row(0.96 if starter == "ok" else 0.04)

    tables.append(table("EngineTurnOver", ["BatteryPower", "Starter"],
                        domains, turn_over))

    def engine_start(turn, pump, gas, plugs):
        if turn == "no":
            return binary_row(0.0)
        faults = [pump == "faulty", gas == "empty", plugs == "faulty"]
        if not any(faults):
            return binary_row(0.96)
        if faults == [False, False, True]:
            return binary_row(0.2)
        return binary_row(0.008)

    tables.append(table("EngineStart",
                        ["EngineTurnOver", "FuelPump", "Gas", "Plugs"],
                        domains, engine_start))
    return document(CAR_VARIABLES, tables)


def write(path, doc):
    path.write_text(json.dumps(doc, indent=2) + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "networks")
    out.mkdir(parents=True, exist_ok=True)
    for n in (3, 5, 10):
        write(out / f"chain_{n}.json", chain(n))
    write(out / "fork_10.json", fork(10))
    write(out / "car.json", car())


if __name__ == "__main__":
    main()
