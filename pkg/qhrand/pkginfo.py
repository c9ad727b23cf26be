# License: MIT

version = "0.1.0"  # Set by CI upon deploy
package_name = "qhrand"
