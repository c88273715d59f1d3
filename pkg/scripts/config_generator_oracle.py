# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Create the .yaml configuration file for each oracle run.
"""
import os


def create_configuration(cfg, cfg_file):
    cfg["save_name"] = "{checks}_m{m}_n{n}_p{p}_q{q}_d{d}_N{trunc}".format(
        checks=cfg["checks"].replace(",", "_"),
        m=cfg["m"],
        n=cfg["n"],
        p=cfg["p"],
        q=cfg["q"],
        d=cfg["d"],
        trunc=cfg["trunc"],
    )

    print(cfg_file + cfg["save_name"] + ".yaml")
    with open(cfg_file + cfg["save_name"] + ".yaml", "w", encoding="utf-8") as w:
        lines = []
        for k, v in cfg.items():
            line = str(k) + ": " + str(v)
            lines.append(line)
        for line in lines:
            w.writelines(line)
            w.write("\n")


def create_oracle_config(checks, m, n, p, q, d, trunc, **extra):
    cfg = {}

    cfg["command"] = "oracle"
    cfg["checks"] = checks

    # save config
    cfg["save_dir"] = "./saved_logs/oracle"
    cfg["save_name"] = None
    cfg["log_level"] = "INFO"
    cfg["format"] = "text"
    cfg["progress"] = True

    # context
    cfg["m"] = m
    cfg["n"] = n
    cfg["p"] = p
    cfg["q"] = q
    cfg["d"] = d
    cfg["trunc"] = trunc
    cfg["threads"] = 1
    cfg.update(extra)

    return cfg


def exp_oracle():
    configs_dir = r"./config/oracle/"
    os.makedirs(configs_dir, exist_ok=True)

    runs = []
    # Cauchy identities at N = 6
    for m, n, d in [(1, 1, 2), (2, 1, 2), (1, 2, 3), (2, 2, 2)]:
        runs.append(dict(checks="cauchy", m=m, n=n, p=0, q=0, d=d, trunc=6))
    for p, q, d in [(1, 1, 2), (2, 1, 2)]:
        runs.append(dict(checks="cauchy_dual", m=0, n=0, p=p, q=q, d=d, trunc=6))
    # hook Schur functions, |lambda| <= 6
    for m in range(1, 4):
        for n in range(1, 4):
            runs.append(dict(checks="hookschur", m=m, n=n, p=0, q=0, d=0, trunc=6))
    # Littlewood-Richardson rule, |mu| + |nu| <= 8
    runs.append(dict(checks="lr", m=1, n=0, p=0, q=0, d=0, trunc=8))
    # Fock space
    runs.append(dict(checks="howe", m=1, n=1, p=1, q=1, d=2, trunc=4))
    runs.append(dict(checks="unitarity", m=1, n=1, p=1, q=1, d=1, trunc=3))
    runs.append(dict(checks="fock", m=1, n=1, p=1, q=1, d=2, trunc=4))
    runs.append(dict(checks="branch,tensor", m=1, n=1, p=1, q=1, d=2, trunc=3, mu="1", nu="1"))
    # finite degenerations p = q = 0
    runs.append(dict(checks="branch,tensor", m=2, n=0, p=0, q=0, d=2, trunc=4, mu="1", nu="1"))

    for run in runs:
        cfg = create_oracle_config(**run)
        create_configuration(cfg, configs_dir)


if __name__ == "__main__":
    exp_oracle()
