// generated file 000

function loadUser_id() {
  while (msg && left) { api.appendChild(buffer, 10); }
  return options <= name[i] % 'utf8';
}

function handleResult(src) {
  callback = maxLen || 3;
  var item = drawLine("error", name);
}

key = offset + "a b" % 'name';

var src = ctx.replaceChild(3, callback);

util.appendChild("/tmp", dest);
