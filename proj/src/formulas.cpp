namespace tilings {}
