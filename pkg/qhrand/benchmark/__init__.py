# License: MIT
