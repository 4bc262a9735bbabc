var falsyValue = false;
if(!"") {
  falsyValue = true;
}
falsyValue // answers true

falsyValue = false;
if(0) {
  falsyValue = true;
}
falsyValue // answers false
