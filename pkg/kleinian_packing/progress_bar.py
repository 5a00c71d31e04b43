# MIT License

# Copyright (c) 2026-present kleinian-packing contributors

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Progress bar manager for enumerated circles, word levels and orbit atoms
"""

from tqdm import tqdm

class ProgressBarManager:
    valid_types = [
        "circles",
        "levels",
        "atoms",
    ]

    def __init__(self):
        # Initialization vars for progress bar (initial, total and unit value)
        self._circles_initial = self._circles_total = 0
        self._levels_initial = self._levels_total = 0
        self._atoms_initial = self._atoms_total = 0

        self._circles_unit = "circle"
        self._levels_unit = "level"
        self._atoms_unit = "atom"

        self._circles: tqdm = None
        self._levels: tqdm = None
        self._atoms: tqdm = None

        self._disabled = False

    def _create_progress_bar(self, var_name: str, desc=None) -> tqdm:
        var: tqdm = getattr(self, var_name)
        if var:
            var.close()

        # Remove "_" in the front and capitalize it
        desc_name = desc or var_name[1:].capitalize()
        total = getattr(self, f"{var_name}_total")

        kwargs_tqdm = {
            "initial": getattr(self, f"{var_name}_initial"),
            "total": total or None,
            "unit": getattr(self, f"{var_name}_unit"),
            "unit_scale": True,
            "leave": False,
        }

        # Determine ncols progress bar
        if len(desc_name) < 20:
            kwargs_tqdm.setdefault('ncols', 80)
        else:
            desc_name = desc_name[:20] + '...'
            kwargs_tqdm.setdefault('ncols', 90)

        kwargs_tqdm.setdefault('desc', desc_name)

        return tqdm(**kwargs_tqdm)

    def _create_dummy_progress_bar(self):
        return tqdm(disable=True)

    @property
    def disabled(self):
        return self._disabled

    @disabled.setter
    def disabled(self, value: bool):
        self._disabled = value

    def _get_progress_bar(self, var, recreate=False, desc=None) -> tqdm:
        if self.disabled:
            return self._create_dummy_progress_bar()

        value_var = getattr(self, var)
        if value_var is None or recreate:
            value_var = self._create_progress_bar(var, desc)
            setattr(self, var, value_var)

        return value_var

    def get_circles_pb(self, recreate=False, desc=None):
        """Get progress bar for enumerated circles"""
        return self._get_progress_bar("_circles", recreate, desc)

    def get_levels_pb(self, recreate=False, desc=None):
        """Get progress bar for word-length levels"""
        return self._get_progress_bar("_levels", recreate, desc)

    def get_atoms_pb(self, recreate=False, desc=None):
        return self._get_progress_bar("_atoms", recreate, desc)

    def set_total(self, type: str, value: int):
        if type not in self.valid_types:
            raise ValueError(f"'{type}' is not a valid progress bar type")

        var_name = f"_{type}"
        pb: tqdm = getattr(self, var_name)
        if pb is not None:
            pb.total = value
            pb.refresh()

        setattr(self, f"{var_name}_total", value)

    def close_all(self):
        """Close all progress bars and reset their totals"""
        for type in self.valid_types:
            var_name = f"_{type}"
            var: tqdm = getattr(self, var_name)
            if var is not None:
                var.close()
                setattr(self, var_name, None)
            setattr(self, f"{var_name}_total", 0)

progress_bar_manager = ProgressBarManager()
