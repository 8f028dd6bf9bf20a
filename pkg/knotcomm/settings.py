from __future__ import annotations
from typing import Any, Dict, Optional, Sequence
import sys
import os
import logging
import importlib
import importlib.util

log = logging.getLogger("settings")

# Settings files looked up in the current directory, first match wins
SETTINGS_FILES: Sequence[str] = ("knotcomm_settings.py", ".knotcomm.py")


class Settings:
    def __init__(self, default_settings: Optional[str] = "knotcomm.global_settings"):
        if default_settings is not None:
            self.add_module(importlib.import_module(default_settings))

    def as_dict(self) -> Dict[str, Any]:
        res = {}
        for setting in dir(self):
            if setting.isupper():
                res[setting] = getattr(self, setting)
        return res

    def add_module(self, mod):
        """
        Add uppercase settings from mod into this module
        """
        for setting in dir(mod):
            if setting.isupper():
                setattr(self, setting, getattr(mod, setting))

    def load(self, pathname: str):
        """
        Load settings from a python file, importing only uppercase symbols
        """
        orig_dwb = sys.dont_write_bytecode
        try:
            sys.dont_write_bytecode = True
            spec = importlib.util.spec_from_file_location("knotcomm.user_settings", pathname)
            user_settings = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(user_settings)
        finally:
            sys.dont_write_bytecode = orig_dwb

        self.add_module(user_settings)

    def load_default_files(self, root: Optional[str] = None) -> Optional[str]:
        """
        Load the first settings file found in root (default: the current
        directory), returning its path, or None if there was none
        """
        if root is None:
            root = os.getcwd()
        for relpath in SETTINGS_FILES:
            abspath = os.path.join(root, relpath)
            if os.path.isfile(abspath):
                log.info("%s: loading settings", abspath)
                self.load(abspath)
                return abspath
        return None
