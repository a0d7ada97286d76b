namespace g4 {}
