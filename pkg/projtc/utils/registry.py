from typing import Type

from vlutils.base import Registry

from projtc.baseClass import Check

__all__ = [
    "CheckRegistry",
]


class CheckRegistry(Registry[Type[Check]]):
    pass
