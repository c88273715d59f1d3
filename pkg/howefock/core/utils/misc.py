# Copyright (c) Microsoft Corporation.
# Modifications Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from concurrent.futures import ThreadPoolExecutor

import ruamel.yaml as yaml


def over_write_args_from_dict(args, dict):
    """
    overwrite arguments according to the config file
    """
    for k in dict:
        setattr(args, k, dict[k])


def over_write_args_from_file(args, yml):
    """
    overwrite arguments according to config file
    """
    if not yml:
        return
    with open(yml, "r", encoding="utf-8") as f:
        dic = yaml.YAML(typ="rt").load(f.read())
        dic = {k: dic[k] if dic[k] != "None" else None for k in dic}
        over_write_args_from_dict(args, dic)


def parallel_map(fn, items, threads=1):
    """
    map fn over items, keeping the input order of the results.

    Args
        fn: function of one argument
        items: iterable of arguments
        threads: worker threads; 1 (or less) runs sequentially
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))
