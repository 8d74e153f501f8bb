namespace twistfold {}
